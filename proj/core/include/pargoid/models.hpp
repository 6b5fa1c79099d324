#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pargoid/model.hpp"

namespace pargoid {

/// A finite pargoid given by a partial multiplication table.
class FiniteTableModel final : public PargoidModel {
public:
    /// `table[{row, col}]` names the product; missing pairs are holes.
    FiniteTableModel(std::vector<std::string> elements, std::map<std::pair<std::string, std::string>, std::string> table,
                     std::optional<std::string> s = std::nullopt, std::optional<std::string> k = std::nullopt,
                     std::string name = "finite");

    std::string name() const override { return name_; }
    bool isFinite() const override { return true; }
    std::vector<Element> universe() const override;
    std::vector<Element> probeElements() const override { return universe(); }
    Element sample(std::mt19937_64& rng) const override;

    Truth3 contains(const Element& e) const override;
    PartialValue<Element> apply(const Element& a, const Element& b, const Budget& budget) const override;

    std::optional<Element> sElem() const override;
    std::optional<Element> kElem() const override;

    bool isTotal() const;
    const std::vector<std::string>& elementNames() const noexcept { return elements_; }

private:
    std::optional<std::size_t> indexOf(const Element& e) const;

    std::vector<std::string> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::optional<std::size_t>> cells_;
    std::optional<std::string> s_;
    std::optional<std::string> k_;
    std::string name_;
};

/// Parses the line-oriented table format:
///   elements: e1 ... en
///   @s ei            (optional)
///   @k ej            (optional)
///   row ei: v1 ... vn  (one per element, `-` marks a hole)
/// `#` starts a comment. Throws ParseError, UnknownElementName, DuplicateEntry.
FiniteTableModel parseFiniteTable(std::string_view text, std::string name = "finite");
FiniteTableModel loadFiniteTable(const std::filesystem::path& path);

/// CL normal forms over s, k and variables, with m * n the normal form of m n.
class NormalFormModel final : public PargoidModel {
public:
    explicit NormalFormModel(Budget budget = {}, std::shared_ptr<const DivergenceRegistry> registry =
                                                     std::make_shared<DivergenceRegistry>(DivergenceRegistry::seeded()));

    std::string name() const override { return "N"; }
    std::vector<Element> probeElements() const override;
    Element sample(std::mt19937_64& rng) const override;

    /// True iff the term is redex-free and built from s, k and variables.
    Truth3 contains(const Element& e) const override;
    /// Exhausted normalization is upgraded to certain absence only when the
    /// registry certifies it; otherwise the product is indeterminate.
    PartialValue<Element> apply(const Element& a, const Element& b, const Budget& budget) const override;

    std::optional<Element> sElem() const override { return Term::s(); }
    std::optional<Element> kElem() const override { return Term::k(); }
    std::optional<Element> constant(const std::string&) const override { return std::nullopt; }
    std::optional<Term> constantTerm(const Element& e) const override;
    std::optional<Term> elementToTerm(const Element& e) const override { return e; }

    /// Normalization of an arbitrary term with the registry consult.
    PartialValue<Term> evaluate(const Term& t, const Budget& budget) const;

    const Budget& budget() const noexcept { return budget_; }
    const DivergenceRegistry& registry() const noexcept { return *registry_; }

private:
    Budget budget_;
    std::shared_ptr<const DivergenceRegistry> registry_;
    mutable std::mutex cacheMutex_;
    mutable std::unordered_map<Term, PartialValue<Term>> cache_;
};

std::shared_ptr<const NormalFormModel> modelN(Budget budget = {});

namespace terms {
/// s (k omega) (k omega)
Term d();
/// s omega i
Term sOmegaI();
/// s (k (s omega i)) (k omega)
Term killer();
} // namespace terms

/// Whether n * x is defined for a variable x not occurring in n. Throws
/// NotANormalForm.
Truth3 lMembership(const NormalFormModel& n, const Term& t, const Budget& budget);
Truth3 lMembership(const Term& t, const Budget& budget = {});

/// The relative substructure of N on L together with d.
ModelPtr modelNPrime(Budget budget = {});
ModelPtr modelNPrime(std::shared_ptr<const NormalFormModel> base);

} // namespace pargoid
