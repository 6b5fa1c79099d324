#include "pargoid/pipeline.hpp"

#include <sstream>

#include "pargoid/errors.hpp"
#include "pargoid/report.hpp"

namespace pargoid {

bool CounterexampleReport::allConfirmed() const {
    for (const auto& c : claims)
        if (c.holds != Truth3::True)
            return false;
    return true;
}

namespace {

Claim membershipClaim(const NormalFormModel& n, const Term& t, bool expected, const Budget& budget) {
    Truth3 in = lMembership(n, t, budget);
    Claim c{print(t) + (expected ? " is in L" : " is not in L"), expected ? in : !in, ""};
    c.detail = "membership " + std::string(toString(in));
    return c;
}

Claim leftPassiveClaim(const NormalFormModel& n, const Term& t, const Budget& budget) {
    auto cert = leftPassiveCertificate(n, t, budget, n.registry());
    Claim c{print(t) + " is left passive in N", Truth3::Unknown, "no certificate found"};
    if (cert) {
        bool ok = verifyCertificate(*cert, n.registry());
        c.holds = truth(ok);
        c.detail = std::string(cert->kind()) + " certificate" + (ok ? "" : " failed to replay");
    }
    return c;
}

Claim lemmaClaim(const NormalFormModel& n, const Term& a, const Term& b, const Term& expected,
                 const Budget& budget) {
    Claim c{"s (k a) (k b) for a = " + print(a) + ", b = " + print(b) + " is " + print(expected), Truth3::Unknown,
            ""};
    try {
        Element e = lemma1LeftPassive(n, a, b, budget);
        c.holds = truth(e == expected);
        c.detail = "constructed " + print(e);
    } catch (const Error& err) {
        c.detail = err.what();
    }
    return c;
}

} // namespace

CounterexampleReport runCounterexample(const CounterexampleConfig& config) {
    const Budget& budget = config.budget;
    auto n = std::make_shared<NormalFormModel>(budget);
    auto nPrime = modelNPrime(n);
    const Term w = terms::omega();
    const Term k = Term::k();
    const Term swi = terms::sOmegaI();
    const Term ksw = Term::app(k, swi);
    const Term kw = Term::app(k, w);
    const Term killer = terms::killer();
    const Term d = terms::d();

    CounterexampleReport r;
    auto add = [&](Claim c) { r.claims.push_back(std::move(c)); };

    {
        auto v = n->apply(w, w, budget);
        add({"omega * omega does not exist in N", truth(v.isAbsent()) || (v.isPresent() ? Truth3::False : Truth3::Unknown),
             v.isAbsent() ? v.absence().reason : v.isPresent() ? "defined" : v.indeterminacy().info});
    }
    add(membershipClaim(*n, w, true, budget));
    add(membershipClaim(*n, kw, true, budget));
    add(membershipClaim(*n, swi, true, budget));
    add(membershipClaim(*n, ksw, true, budget));
    {
        Term start = Term::app(swi, w);
        Truth3 t = reducesTo(start, Term::apply(w, w, w), budget.nodes);
        add({print(start) + " reduces to omega omega omega", t, ""});
    }
    add(leftPassiveClaim(*n, d, budget));
    add(leftPassiveClaim(*n, killer, budget));
    add(lemmaClaim(*n, w, w, d, budget));
    add(lemmaClaim(*n, swi, w, killer, budget));
    add(membershipClaim(*n, killer, false, budget));
    add({"d is in N'", nPrime->contains(d), ""});
    {
        std::string lhs, rhs;
        Truth3 t = checkLawInstance(*nPrime, Law::Law0, {ksw, kw}, budget, &lhs, &rhs);
        add({"N' fails law (0) at x = " + print(ksw) + ", y = " + print(kw), !t, "s x y: " + lhs});
    }

    InstanceSpec spec{false, config.samples, config.seed};
    for (Law law : {Law::Law1, Law::Law2}) {
        r.nPrimeLaws.push_back(checkLaw(*nPrime, law, spec, budget));
        const auto& rep = r.nPrimeLaws.back();
        Truth3 t = rep.falseCount > 0 ? Truth3::False : rep.unknownCount > 0 ? Truth3::Unknown : Truth3::True;
        std::ostringstream detail;
        detail << rep.trueCount << " true, " << rep.falseCount << " false, " << rep.unknownCount << " unknown of "
               << rep.instances << " sampled instances";
        add({"N' satisfies law (" + std::string(toString(law)) + ") on sampled instances", t, detail.str()});
    }

    r.sweep = prop53Search(config.sizeBound, budget);
    {
        std::ostringstream detail;
        detail << r.sweep.entries.size() << " candidates of " << r.sweep.closedNormalForms
               << " closed normal forms, " << r.sweep.count("eliminated") << " eliminated, "
               << r.sweep.count("unknown") << " undetermined";
        Truth3 t = r.sweep.count("survivor") > 0 ? Truth3::False
                   : r.sweep.count("unknown") > 0 ? Truth3::Unknown
                                                 : Truth3::True;
        add({"no closed normal form with at most " + std::to_string(config.sizeBound) +
                 " leaves satisfies t x y & t x y z = x z (y z) in N'",
             t, detail.str()});
    }
    return r;
}

nlohmann::json toJson(const CounterexampleReport& r) {
    using nlohmann::json;
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"claim", c.statement}, {"holds", std::string(toString(c.holds))}, {"detail", c.detail}});
    json laws = json::array();
    for (const auto& l : r.nPrimeLaws)
        laws.push_back(toJson(l));
    json entries = json::array();
    for (const auto& e : r.sweep.entries)
        if (e.status != "eliminated")
            entries.push_back(toJson(e));
    return {{"allConfirmed", r.allConfirmed()},
            {"claims", claims},
            {"nPrimeLaws", laws},
            {"sweep",
             {{"note", "bounded falsification search, not a proof"},
              {"sizeBound", r.sweep.sizeBound},
              {"closedNormalForms", r.sweep.closedNormalForms},
              {"excludedFromNPrime", r.sweep.excludedFromNPrime},
              {"candidates", r.sweep.entries.size()},
              {"eliminated", r.sweep.count("eliminated")},
              {"survivors", r.sweep.count("survivor")},
              {"unknown", r.sweep.count("unknown")},
              {"notEliminated", entries}}}};
}

std::string describe(const CounterexampleReport& r) {
    std::ostringstream out;
    for (const auto& c : r.claims) {
        const char* tag = c.holds == Truth3::True ? "confirmed" : c.holds == Truth3::False ? "REFUTED" : "undetermined";
        out << tag << ": " << c.statement;
        if (!c.detail.empty())
            out << " (" << c.detail << ")";
        out << '\n';
    }
    for (const auto& l : r.nPrimeLaws)
        for (const auto& c : l.counterexamples) {
            out << "  law (" << toString(l.law) << ") counterexample (";
            for (std::size_t i = 0; i < c.instance.size(); ++i)
                out << (i ? ", " : "") << c.instance[i];
            out << "): " << c.lhs << " vs " << c.rhs << '\n';
        }
    out << "sweep (bounded falsification search, not a proof): " << r.sweep.count("eliminated")
        << " eliminated, " << r.sweep.count("survivor") << " survivors, " << r.sweep.count("unknown")
        << " unknown\n";
    return out.str();
}

} // namespace pargoid
