#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pargoid/model.hpp"
#include "pargoid/models.hpp"

namespace pargoid {

enum class AbstractionClause {
    Identity,  ///< p = x gives s k k
    Constant,  ///< x absent from p gives k p
    Split,     ///< p = r q gives s (λ*x.r) (λ*x.q)
};

std::string_view toString(AbstractionClause c);

struct AbstractionResult {
    Term result;
    /// Clause used at each recursion node, in preorder.
    std::vector<AbstractionClause> clauseTrace;
};

/// Bracket abstraction with the three clauses tried in order; the
/// "x absent" clause wins over splitting an application.
AbstractionResult lambdaStar(const std::string& x, const Term& p);

/// λ*x1 ... λ*xn.p, innermost variable abstracted first. Throws
/// DuplicateVariable, or std::invalid_argument for an empty list.
Term lambdaStarMulti(const std::vector<std::string>& xs, const Term& p);

/// (λ*x.p)(c) · b  ≃  p(c, b)
Truth3 lambdaStarProperty(const PargoidModel& m, const Term& p, const std::string& x, const Assignment& asg,
                          const Element& b, const Budget& budget);

/// Emptiness of a polynomial's domain: exhaustive on finite models, sampled
/// otherwise (only a defined sample can settle it, as False).
Truth3 domainEmpty(const PargoidModel& m, const PolyTerm& p, const Budget& budget, std::size_t samples = 64,
                   std::uint64_t seed = 1);

/// d <| Dom p = ∅ |> (λ*x1 ... λ*xn.p). Throws MissingLeftPassive when the
/// domain is known to be empty and no left-passive element is supplied.
PartialValue<Element> witness(const PargoidModel& m, const Term& p, const std::vector<std::string>& xs,
                              Truth3 domEmpty, const std::optional<Element>& leftPassive, const Budget& budget);

/// s (k a) (k b) for a product a b that is certainly undefined. Throws
/// PrerequisiteUndefined naming the first missing intermediate product; on
/// finite models also checks the law instances the construction relies on
/// and throws LawInstanceViolated if one fails.
Element lemma1LeftPassive(const PargoidModel& m, const Element& a, const Element& b, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Bounded search for s-like elements of N'

struct SweepEntry {
    Term candidate;
    std::string status;       ///< "eliminated", "survivor", "unknown"
    std::string eliminatedBy; ///< "(i)" or "(ii)" when eliminated
    std::string instance;
    std::string detail;
};

struct SweepReport {
    std::size_t sizeBound = 0;
    std::size_t closedNormalForms = 0;
    std::size_t excludedFromNPrime = 0;
    std::vector<SweepEntry> entries;

    std::size_t count(std::string_view status) const;
};

/// For every closed normal form t of N' with at most `sizeBound` leaves,
/// tests (i) t x y defined in N' and (ii) t x y z ≃ x z (y z) on a generic
/// instance and on x := k(s omega i), y := k omega. A falsification harness:
/// it records which check eliminated each candidate.
SweepReport prop53Search(std::size_t sizeBound, const Budget& budget = {});

/// Checks one candidate against the same conditions.
SweepEntry prop53Candidate(const PargoidModel& nPrime, const Term& t, const Budget& budget);

} // namespace pargoid
