#include "pargoid/abstraction.hpp"

#include <set>
#include <stdexcept>

#include "pargoid/errors.hpp"

namespace pargoid {

std::string_view toString(AbstractionClause c) {
    switch (c) {
    case AbstractionClause::Identity:
        return "identity";
    case AbstractionClause::Constant:
        return "constant";
    case AbstractionClause::Split:
        break;
    }
    return "split";
}

namespace {

Term abstractInto(const std::string& x, const Term& p, std::vector<AbstractionClause>& trace) {
    if (p.isVar() && p.name() == x) {
        trace.push_back(AbstractionClause::Identity);
        return terms::i();
    }
    if (!occurs(p, x)) {
        trace.push_back(AbstractionClause::Constant);
        return Term::app(Term::k(), p);
    }
    trace.push_back(AbstractionClause::Split);
    Term r = abstractInto(x, p.left(), trace);
    Term q = abstractInto(x, p.right(), trace);
    return Term::apply(Term::s(), std::move(r), std::move(q));
}

} // namespace

AbstractionResult lambdaStar(const std::string& x, const Term& p) {
    AbstractionResult out{p, {}};
    out.result = abstractInto(x, p, out.clauseTrace);
    return out;
}

Term lambdaStarMulti(const std::vector<std::string>& xs, const Term& p) {
    if (xs.empty())
        throw std::invalid_argument("lambdaStarMulti needs at least one variable");
    std::set<std::string> seen;
    for (const auto& x : xs)
        if (!seen.insert(x).second)
            throw DuplicateVariable("variable " + x + " listed twice");
    Term cur = p;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        cur = lambdaStar(*it, cur).result;
    return cur;
}

Truth3 lambdaStarProperty(const PargoidModel& m, const Term& p, const std::string& x, const Assignment& asg,
                          const Element& b, const Budget& budget) {
    Term abstraction = lambdaStar(x, p).result;
    auto head = evalPoly(m, abstraction, asg, budget);
    auto lhs = applyChain(m, head, {b}, budget);
    Assignment extended = asg;
    extended.insert_or_assign(x, b);
    auto rhs = evalPoly(m, p, extended, budget);
    return kleeneEqual(lhs, rhs);
}

namespace {

// Calls `visit` with every assignment of universe elements to `params`.
template <typename Visit>
bool forEachAssignment(const std::vector<Element>& universe, const std::vector<std::string>& params,
                       Assignment& asg, std::size_t index, Visit&& visit) {
    if (index == params.size())
        return visit(asg);
    for (const auto& e : universe) {
        asg.insert_or_assign(params[index], e);
        if (!forEachAssignment(universe, params, asg, index + 1, visit))
            return false;
    }
    return true;
}

} // namespace

Truth3 domainEmpty(const PargoidModel& m, const PolyTerm& p, const Budget& budget, std::size_t samples,
                   std::uint64_t seed) {
    bool sawIndeterminate = false;
    bool sawPresent = false;
    auto visit = [&](const Assignment& asg) {
        auto v = evalPoly(m, p, asg, budget);
        if (v.isPresent()) {
            sawPresent = true;
            return false;
        }
        if (v.isIndeterminate())
            sawIndeterminate = true;
        return true;
    };
    if (m.isFinite()) {
        Assignment asg;
        forEachAssignment(m.universe(), p.params, asg, 0, visit);
        if (sawPresent)
            return Truth3::False;
        return sawIndeterminate ? Truth3::Unknown : Truth3::True;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples && !sawPresent; ++i) {
        Assignment asg;
        for (const auto& x : p.params)
            asg.emplace(x, m.sample(rng));
        visit(asg);
    }
    return sawPresent ? Truth3::False : Truth3::Unknown;
}

PartialValue<Element> witness(const PargoidModel& m, const Term& p, const std::vector<std::string>& xs,
                              Truth3 domEmpty, const std::optional<Element>& leftPassive, const Budget& budget) {
    switch (domEmpty) {
    case Truth3::True:
        if (!leftPassive)
            throw MissingLeftPassive("the polynomial is everywhere undefined and no left-passive element was given");
        return PartialValue<Element>::present(*leftPassive);
    case Truth3::Unknown:
        return PartialValue<Element>::indeterminate("emptiness of the polynomial's domain is undetermined");
    case Truth3::False:
        break;
    }
    return evalPoly(m, lambdaStarMulti(xs, p), Assignment{}, budget);
}

Element lemma1LeftPassive(const PargoidModel& m, const Element& a, const Element& b, const Budget& budget) {
    auto s = m.sElem();
    auto k = m.kElem();
    if (!s || !k)
        throw NoDesignatedCombinators(m.name() + " has no designated s and k");
    if (!m.apply(a, b, budget).isAbsent())
        throw WitnessNotUndefined(m.show(a) + " " + m.show(b) + " is not certainly undefined");

    auto need = [&](const PartialValue<Element>& v, const std::string& what) -> Element {
        if (!v.isPresent())
            throw PrerequisiteUndefined(what + " is not defined" +
                                        (v.isIndeterminate() ? " within budget" : ""));
        return v.value();
    };
    Element ka = need(m.apply(*k, a, budget), "k a");
    Element kb = need(m.apply(*k, b, budget), "k b");
    Element ska = need(m.apply(*s, ka, budget), "s (k a)");
    Element d = need(m.apply(ska, kb, budget), "s (k a) (k b)");

    if (m.isFinite()) {
        // d x ≃ k a x (k b x) ≃ a b needs these law instances for every x.
        for (const auto& x : m.universe()) {
            if (checkLawInstance(m, Law::Law1, {ka, kb, x}, budget) != Truth3::True)
                throw LawInstanceViolated("law (1) fails at (k a, k b, " + m.show(x) + ")");
            if (checkLawInstance(m, Law::Law2, {a, x}, budget) != Truth3::True)
                throw LawInstanceViolated("law (2) fails at (a, " + m.show(x) + ")");
            if (checkLawInstance(m, Law::Law2, {b, x}, budget) != Truth3::True)
                throw LawInstanceViolated("law (2) fails at (b, " + m.show(x) + ")");
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Sweep

std::size_t SweepReport::count(std::string_view status) const {
    std::size_t n = 0;
    for (const auto& e : entries)
        n += e.status == status;
    return n;
}

SweepEntry prop53Candidate(const PargoidModel& nPrime, const Term& t, const Budget& budget) {
    SweepEntry entry{t, "survivor", "", "", ""};
    std::set<std::string> avoid = vars(t);
    VarSet names(avoid);
    const Term x = Term::var(names.fresh());
    const Term y = Term::var(names.fresh());
    const Term z = Term::var(names.fresh());

    const Term txy = Term::apply(t, x, y);
    const Term txyz = Term::apply(t, x, y, z);
    const Term rhs = Term::apply(x, z, Term::app(y, z));

    struct Probe {
        std::string name;
        Assignment asg;
    };
    const std::vector<Probe> probes{
        {"generic", {{x.name(), x}, {y.name(), y}, {z.name(), z}}},
        {"x=k(s omega i), y=k omega",
         {{x.name(), Term::app(Term::k(), terms::sOmegaI())}, {y.name(), Term::app(Term::k(), terms::omega())},
          {z.name(), z}}},
    };

    bool undetermined = false;
    std::string undeterminedDetail;
    for (const auto& probe : probes) {
        auto first = evalPoly(nPrime, txy, probe.asg, budget);
        if (first.isAbsent()) {
            entry.status = "eliminated";
            entry.eliminatedBy = "(i)";
            entry.instance = probe.name;
            entry.detail = "t x y undefined in N': " + first.absence().reason;
            return entry;
        }
        if (first.isIndeterminate() && !undetermined) {
            undetermined = true;
            undeterminedDetail = "(i) at " + probe.name + ": " + first.indeterminacy().info;
        }
        auto l = evalPoly(nPrime, txyz, probe.asg, budget);
        auto r = evalPoly(nPrime, rhs, probe.asg, budget);
        Truth3 eq = kleeneEqual(l, r);
        if (eq == Truth3::False) {
            auto show = [&](const PartialValue<Element>& v) {
                return v.isPresent() ? nPrime.show(v.value()) : std::string("undefined");
            };
            entry.status = "eliminated";
            entry.eliminatedBy = "(ii)";
            entry.instance = probe.name;
            entry.detail = "t x y z = " + show(l) + " but x z (y z) = " + show(r);
            return entry;
        }
        if (eq == Truth3::Unknown && !undetermined) {
            undetermined = true;
            undeterminedDetail = "(ii) at " + probe.name + " undetermined within budget";
        }
    }
    if (nPrime.contains(t) != Truth3::True) {
        undetermined = true;
        undeterminedDetail = "membership of the candidate in N' is undetermined";
    }
    if (undetermined) {
        entry.status = "unknown";
        entry.detail = undeterminedDetail;
    }
    return entry;
}

SweepReport prop53Search(std::size_t sizeBound, const Budget& budget) {
    auto base = std::make_shared<NormalFormModel>(budget);
    auto nPrime = modelNPrime(base);
    SweepReport report;
    report.sizeBound = sizeBound;
    for (const Term& t : enumerateTerms({Term::s(), Term::k()}, sizeBound)) {
        if (hasRedex(t))
            continue;
        ++report.closedNormalForms;
        if (lMembership(*base, t, budget) == Truth3::False && t != terms::d()) {
            ++report.excludedFromNPrime;
            continue;
        }
        report.entries.push_back(prop53Candidate(*nPrime, t, budget));
    }
    return report;
}

} // namespace pargoid
