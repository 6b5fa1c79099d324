#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pargoid/divergence.hpp"
#include "pargoid/partiality.hpp"
#include "pargoid/rewrite.hpp"
#include "pargoid/term.hpp"

namespace pargoid {

/// Elements of every model are carried as terms: term models use the term
/// itself, table and numeric models use an element-handle leaf.
using Element = Term;

/// A partial applicative structure.
class PargoidModel {
public:
    virtual ~PargoidModel() = default;

    virtual std::string name() const = 0;

    virtual bool isFinite() const { return false; }
    /// Full universe of a finite model. Throws NotFinite otherwise.
    virtual std::vector<Element> universe() const;

    /// Notable elements always covered by sampled law checks.
    virtual std::vector<Element> probeElements() const = 0;
    virtual Element sample(std::mt19937_64& rng) const = 0;

    virtual Truth3 contains(const Element& e) const = 0;
    virtual PartialValue<Element> apply(const Element& a, const Element& b, const Budget& budget) const = 0;

    virtual std::optional<Element> sElem() const { return std::nullopt; }
    virtual std::optional<Element> kElem() const { return std::nullopt; }

    /// Element named by a `#handle` leaf of a polynomial.
    virtual std::optional<Element> constant(const std::string& handle) const;
    /// Leaf (or closed term) denoting `e` inside a polynomial.
    virtual std::optional<Term> constantTerm(const Element& e) const;
    /// Embedding into CL terms, for term-based models.
    virtual std::optional<Term> elementToTerm(const Element&) const { return std::nullopt; }

    virtual std::string show(const Element& e) const;
};

using ModelPtr = std::shared_ptr<const PargoidModel>;

/// A term over variables, s, k and element constants, with its declared
/// parameters (which may include variables that do not occur).
struct PolyTerm {
    Term body;
    std::vector<std::string> params;
};

using Assignment = std::map<std::string, Element>;

/// Strict structural evaluation. Throws UnboundVariable, UnknownConstant, or
/// NoDesignatedCombinators for leaves it cannot interpret.
PartialValue<Element> evalPoly(const PargoidModel& m, const Term& p, const Assignment& asg, const Budget& budget);
PartialValue<Element> evalPoly(const PargoidModel& m, const PolyTerm& p, const Assignment& asg, const Budget& budget);

/// Strict left-nested application a b1 ... bn.
PartialValue<Element> applyChain(const PargoidModel& m, const PartialValue<Element>& head,
                                 const std::vector<Element>& args, const Budget& budget);

/// The n-ary polynomial a1 a2, everywhere undefined. Throws
/// WitnessNotUndefined unless a1 a2 is certainly absent.
PolyTerm emptyPolynomial(const PargoidModel& m, std::size_t arity, const Element& a1, const Element& a2,
                         const Budget& budget = {});

/// Throws NotFinite for infinite models.
bool isLeftPassiveExhaustive(const PargoidModel& m, const Element& a, const Budget& budget = {});

/// Certificate that `a x` (x fresh) reduces to a closed term with no normal
/// form; then a b has no normal form for every b. Null when none is found.
std::shared_ptr<const Certificate> leftPassiveCertificate(const PargoidModel& m, const Element& a,
                                                          const Budget& budget,
                                                          const DivergenceRegistry& registry);

using Membership = std::function<Truth3(const Element&)>;

/// Relative substructure: products are kept only when they are members.
ModelPtr restrict(ModelPtr base, Membership membership, std::string name = {});

// ---------------------------------------------------------------------------
// Law checks

enum class Law { Law0, Law1, Law2 };

std::string_view toString(Law law);
std::optional<Law> parseLaw(std::string_view text);
std::size_t arity(Law law);

struct InstanceSpec {
    bool exhaustive = false;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

struct Counterexample {
    std::vector<std::string> instance;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    Law law;
    std::size_t instances = 0;
    std::size_t trueCount = 0;
    std::size_t falseCount = 0;
    std::size_t unknownCount = 0;
    std::vector<Counterexample> counterexamples;
};

/// Instance tuples for a law: every tuple of a finite universe, or seeded
/// samples starting with shuffled tuples of probe elements.
std::vector<std::vector<Element>> lawInstances(const PargoidModel& m, std::size_t arity, const InstanceSpec& spec);

/// Kleene-equality of the two sides per instance (law 0: presence of s x y).
/// Throws NoDesignatedCombinators.
Truth3 checkLawInstance(const PargoidModel& m, Law law, const std::vector<Element>& instance, const Budget& budget,
                        std::string* lhsOut = nullptr, std::string* rhsOut = nullptr);
LawReport checkLaw(const PargoidModel& m, Law law, const InstanceSpec& spec, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Combinatory completeness on finite models

struct CompletenessFailure {
    std::string polynomial;
    std::string witness;
    std::vector<std::string> instance;
    std::string lhs;
    std::string rhs;
};

struct CompletenessReport {
    bool lawsHold = true;
    std::vector<LawReport> lawChecks;
    bool total = true;
    std::size_t polynomials = 0;
    std::size_t emptyDomain = 0;
    std::size_t tuples = 0;
    std::size_t unknown = 0;
    std::vector<CompletenessFailure> failures;
    /// Nullary polynomials: how many have a value (each is its own witness)
    /// and how many are empty (no element can witness them).
    std::size_t nullaryDefined = 0;
    std::size_t nullaryEmpty = 0;

    bool passed() const { return failures.empty() && unknown == 0; }
};

/// Every polynomial up to `maxPolySize` leaves in arities 1..maxArity is
/// given a witness via bracket abstraction (or the left-passive element when
/// its domain is empty) and checked on every argument tuple.
CompletenessReport completenessCheckFinite(const PargoidModel& m, std::size_t maxPolySize, std::size_t maxArity,
                                           const Budget& budget = {},
                                           const std::optional<Element>& leftPassive = std::nullopt);

/// All terms with at most `maxSize` leaves drawn from `leaves`.
std::vector<Term> enumerateTerms(const std::vector<Term>& leaves, std::size_t maxSize);
/// Terms with exactly `size` leaves.
std::vector<Term> enumerateTermsOfSize(const std::vector<Term>& leaves, std::size_t size);

} // namespace pargoid
