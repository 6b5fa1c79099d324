#include <functional>

#include "pargoid/abstraction.hpp"
#include "pargoid/errors.hpp"

namespace pargoid {

namespace {

std::vector<std::string> shown(const PargoidModel& m, const std::vector<Element>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs)
        out.push_back(m.show(x));
    return out;
}

std::string showValue(const PargoidModel& m, const PartialValue<Element>& v) {
    if (v.isPresent())
        return m.show(v.value());
    return v.isAbsent() ? "undefined" : "unknown";
}

bool isTotal(const PargoidModel& m, const std::vector<Element>& universe, const Budget& budget) {
    for (const auto& a : universe)
        for (const auto& b : universe)
            if (!m.apply(a, b, budget).isPresent())
                return false;
    return true;
}

} // namespace

CompletenessReport completenessCheckFinite(const PargoidModel& m, std::size_t maxPolySize, std::size_t maxArity,
                                           const Budget& budget, const std::optional<Element>& leftPassive) {
    if (!m.isFinite())
        throw NotFinite(m.name() + " is not a finite model");
    if (!m.sElem() || !m.kElem())
        throw NoDesignatedCombinators(m.name() + " has no designated s and k");
    const auto universe = m.universe();

    CompletenessReport report;
    report.total = isTotal(m, universe, budget);
    if (!report.total && !leftPassive)
        throw MissingLeftPassive(m.name() + " is not total and no left-passive element was supplied");

    for (Law law : {Law::Law1, Law::Law2}) {
        report.lawChecks.push_back(checkLaw(m, law, InstanceSpec{true}, budget));
        report.lawsHold = report.lawsHold && report.lawChecks.back().falseCount == 0 &&
                          report.lawChecks.back().unknownCount == 0;
    }

    std::vector<Term> constants;
    for (const auto& e : universe)
        if (auto c = m.constantTerm(e))
            constants.push_back(*c);

    for (const Term& p : enumerateTerms(constants, maxPolySize)) {
        auto v = evalPoly(m, p, Assignment{}, budget);
        if (v.isPresent())
            ++report.nullaryDefined;
        else if (v.isAbsent())
            ++report.nullaryEmpty;
    }

    for (std::size_t n = 1; n <= maxArity; ++n) {
        std::vector<std::string> params;
        std::vector<Term> leaves = constants;
        for (std::size_t i = 1; i <= n; ++i) {
            params.push_back("x" + std::to_string(i));
            leaves.push_back(Term::var(params.back()));
        }
        for (const Term& body : enumerateTerms(leaves, maxPolySize)) {
            PolyTerm p{body, params};
            ++report.polynomials;
            Truth3 empty = domainEmpty(m, p, budget);
            report.emptyDomain += empty == Truth3::True;
            auto a = witness(m, body, params, empty, leftPassive, budget);

            std::vector<Element> tuple(n, universe.front());
            std::function<void(std::size_t)> visit = [&](std::size_t i) {
                if (i < n) {
                    for (const auto& e : universe) {
                        tuple[i] = e;
                        visit(i + 1);
                    }
                    return;
                }
                ++report.tuples;
                Assignment asg;
                for (std::size_t j = 0; j < n; ++j)
                    asg.emplace(params[j], tuple[j]);
                auto lhs = applyChain(m, a, tuple, budget);
                auto rhs = evalPoly(m, p, asg, budget);
                Truth3 eq = kleeneEqual(lhs, rhs);
                if (eq == Truth3::Unknown)
                    ++report.unknown;
                if (eq == Truth3::False)
                    report.failures.push_back({print(body), showValue(m, a), shown(m, tuple), showValue(m, lhs),
                                               showValue(m, rhs)});
            };
            visit(0);
        }
    }
    return report;
}

} // namespace pargoid
