#pragma once

// Generators and exhaustive drivers shared by the property and acceptance
// tests.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <pargoid/model.hpp>
#include <pargoid/models.hpp>
#include <pargoid/rewrite.hpp>

namespace support {

using pargoid::Term;

inline const std::vector<Term>& mixedLeaves() {
    static const std::vector<Term> leaves{Term::s(), Term::k(), Term::var("x"), Term::var("y"), Term::var("z")};
    return leaves;
}

inline const std::vector<Term>& closedLeaves() {
    static const std::vector<Term> leaves{Term::s(), Term::k()};
    return leaves;
}

/// Uniform-ish random binary tree with exactly `size` leaves.
inline Term randomTerm(std::mt19937_64& rng, std::size_t size, const std::vector<Term>& leaves) {
    if (size <= 1)
        return leaves[rng() % leaves.size()];
    std::size_t left = 1 + rng() % (size - 1);
    Term l = randomTerm(rng, left, leaves);
    return Term::app(l, randomTerm(rng, size - left, leaves));
}

struct ConfluenceReport {
    std::size_t terms = 0;
    std::size_t compared = 0;     ///< both strategies reached a normal form
    std::size_t inconclusive = 0; ///< at least one ran out of budget
    std::size_t disagreements = 0;
    std::vector<std::string> examples;
    std::vector<std::string> inconclusiveExamples;
};

/// Normalizes every term with at most `maxSize` leaves under leftmost-
/// outermost and rightmost-innermost reduction and compares the results.
/// Terms of the largest size are built on the fly from stored smaller ones.
inline ConfluenceReport confluenceProbe(const std::vector<Term>& leaves, std::size_t maxSize,
                                        const pargoid::Budget& budget) {
    using namespace pargoid;
    ConfluenceReport report;
    auto visit = [&](const Term& t) {
        ++report.terms;
        if (!t.containsRedex())
            return;
        auto lo = normalizeWith(t, Strategy::LeftmostOutermost, budget);
        auto ri = normalizeWith(t, Strategy::RightmostInnermost, budget);
        if (!isDefined(lo) || !isDefined(ri)) {
            if (report.inconclusive++ < 3)
                report.inconclusiveExamples.push_back(print(t));
            return;
        }
        ++report.compared;
        if (std::get<Defined>(lo).normalForm != std::get<Defined>(ri).normalForm) {
            ++report.disagreements;
            if (report.examples.size() < 5)
                report.examples.push_back(print(t));
        }
    };

    std::vector<std::vector<Term>> bySize(maxSize + 1);
    for (std::size_t n = 1; n <= maxSize; ++n) {
        const bool last = n == maxSize;
        if (n == 1) {
            bySize[1] = leaves;
        } else {
            for (std::size_t i = 1; i < n; ++i)
                for (const Term& l : bySize[i])
                    for (const Term& r : bySize[n - i]) {
                        Term t = Term::app(l, r);
                        if (last)
                            visit(t);
                        else
                            bySize[n].push_back(std::move(t));
                    }
        }
        if (!last)
            for (const Term& t : bySize[n])
                visit(t);
    }
    if (maxSize == 1)
        for (const Term& t : bySize[1])
            visit(t);
    return report;
}

/// Cells are row-major indices into the universe, -1 for a hole.
inline void forEachTable(unsigned n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cells(n * n, -1);
    while (true) {
        visit(cells);
        std::size_t i = 0;
        while (i < cells.size() && cells[i] == static_cast<int>(n) - 1)
            cells[i++] = -1;
        if (i == cells.size())
            return;
        ++cells[i];
    }
}

/// k x y = x for all x, y, on raw cells.
inline bool law2Holds(const std::vector<int>& cells, unsigned n, unsigned k) {
    for (unsigned x = 0; x < n; ++x) {
        int kx = cells[k * n + x];
        if (kx < 0)
            return false;
        for (unsigned y = 0; y < n; ++y)
            if (cells[kx * n + y] != static_cast<int>(x))
                return false;
    }
    return true;
}

inline std::string cellName(unsigned i) { return "e" + std::to_string(i); }

inline pargoid::FiniteTableModel tableModel(const std::vector<int>& cells, unsigned n,
                                            std::optional<unsigned> s = std::nullopt,
                                            std::optional<unsigned> k = std::nullopt) {
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i)
        names.push_back(cellName(i));
    std::map<std::pair<std::string, std::string>, std::string> table;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            if (cells[a * n + b] >= 0)
                table[{names[a], names[b]}] = names[cells[a * n + b]];
    auto name = [&](std::optional<unsigned> i) {
        return i ? std::optional<std::string>(names[*i]) : std::nullopt;
    };
    return pargoid::FiniteTableModel(names, table, name(s), name(k));
}

/// Random table with at least one hole and designated s, k.
inline pargoid::FiniteTableModel randomTable(std::mt19937_64& rng, unsigned n, double holeRate) {
    std::vector<int> cells(n * n);
    std::bernoulli_distribution hole(holeRate);
    for (auto& c : cells)
        c = hole(rng) ? -1 : static_cast<int>(rng() % n);
    cells[rng() % cells.size()] = -1;
    return tableModel(cells, n, static_cast<unsigned>(rng() % n), static_cast<unsigned>(rng() % n));
}

} // namespace support
