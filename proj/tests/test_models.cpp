#include <doctest.h>

#include <pargoid/errors.hpp>
#include <pargoid/models.hpp>

#include "oracle.hpp"

using namespace pargoid;

namespace {

const Term w = terms::omega();

std::string data(const char* name) { return std::string(PARGOID_TEST_DATA) + "/" + name; }

Element e(const char* handle) { return Term::elem(handle); }

} // namespace

TEST_CASE("table parser") {
    auto m = parseFiniteTable("elements: e\nrow e: e\n");
    CHECK(m.isTotal());
    CHECK(m.apply(e("e"), e("e"), {}).value() == e("e"));
    CHECK_FALSE(m.sElem().has_value());

    auto h = loadFiniteTable(data("holes.tbl"));
    CHECK_FALSE(h.isTotal());
    CHECK(h.apply(e("a"), e("b"), {}).isAbsent());
    CHECK(h.apply(e("a"), e("a"), {}).value() == e("b"));
    CHECK(h.contains(e("a")) == Truth3::True);
    CHECK(h.contains(e("z")) == Truth3::False);
    CHECK(h.universe().size() == 3);

    auto one = loadFiniteTable(data("one.tbl"));
    CHECK(one.sElem() == e("e"));
    CHECK(one.kElem() == e("e"));
}

TEST_CASE("table parser errors") {
    CHECK_THROWS_AS(parseFiniteTable(""), ParseError);
    CHECK_THROWS_AS(parseFiniteTable("row e: e\n"), ParseError);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\n"), ParseError);
    CHECK_THROWS_AS(parseFiniteTable("elements: e f\nrow e: e\nrow f: e\n"), ParseError);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\nrow e: z\n"), UnknownElementName);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\nrow z: e\n"), UnknownElementName);
    CHECK_THROWS_AS(parseFiniteTable("elements: e e\nrow e: e e\n"), DuplicateEntry);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\nrow e: e\nrow e: e\n"), DuplicateEntry);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\n@s e\n@s e\nrow e: e\n"), DuplicateEntry);
    CHECK_THROWS_AS(parseFiniteTable("elements: e\n@s z\nrow e: e\n"), UnknownElementName);
    CHECK_THROWS_AS(loadFiniteTable(data("missing.tbl")), ParseError);
    CHECK_NOTHROW(parseFiniteTable("# comment\nelements: e   # trailing\n\nrow e: -\n"));
}

TEST_CASE("evalPoly on a finite table") {
    auto m = loadFiniteTable(data("holes.tbl"));
    CHECK(evalPoly(m, parse("x"), {{"x", e("a")}}, {}).value() == e("a"));
    CHECK(evalPoly(m, parse("#a #a"), {}, {}).value() == e("b"));
    // the inner product is a hole, so the whole expression is
    CHECK(evalPoly(m, parse("#b (#a #b)"), {}, {}).isAbsent());
    CHECK_THROWS_AS(evalPoly(m, parse("x"), {}, {}), UnboundVariable);
    CHECK_THROWS_AS(evalPoly(m, parse("#z"), {}, {}), UnknownConstant);
    CHECK_THROWS_AS(evalPoly(m, parse("s"), {}, {}), NoDesignatedCombinators);
}

TEST_CASE("emptyPolynomial") {
    auto m = loadFiniteTable(data("holes.tbl"));
    for (std::size_t n = 0; n <= 2; ++n) {
        auto p = emptyPolynomial(m, n, e("a"), e("b"));
        CHECK(p.params.size() == n);
        if (n == 0)
            CHECK(evalPoly(m, p, {}, {}).isAbsent());
        for (const auto& x : m.universe())
            for (const auto& y : m.universe()) {
                Assignment asg;
                for (std::size_t i = 0; i < n; ++i)
                    asg.emplace(p.params[i], i == 0 ? x : y);
                CHECK(evalPoly(m, p, asg, {}).isAbsent());
            }
    }
    auto one = loadFiniteTable(data("one.tbl"));
    CHECK_THROWS_AS(emptyPolynomial(one, 1, e("e"), e("e")), WitnessNotUndefined);
}

TEST_CASE("isLeftPassiveExhaustive") {
    auto one = loadFiniteTable(data("one.tbl"));
    CHECK_FALSE(isLeftPassiveExhaustive(one, e("e")));
    auto m = loadFiniteTable(data("holes.tbl"));
    CHECK(isLeftPassiveExhaustive(m, e("c")));
    CHECK_FALSE(isLeftPassiveExhaustive(m, e("b")));
    auto single = loadFiniteTable(data("single_hole.tbl"));
    CHECK_FALSE(isLeftPassiveExhaustive(single, e("q")));
    CHECK_THROWS_AS(isLeftPassiveExhaustive(*modelN(), w), NotFinite);
}

TEST_CASE("checkLaw on finite tables") {
    auto one = loadFiniteTable(data("one.tbl"));
    InstanceSpec all{true};
    for (Law law : {Law::Law0, Law::Law1, Law::Law2}) {
        auto r = checkLaw(one, law, all);
        CHECK(r.instances == 1);
        CHECK(r.trueCount == 1);
    }
    auto broken = loadFiniteTable(data("law2_broken.tbl"));
    auto r = checkLaw(broken, Law::Law2, all);
    CHECK(r.instances == 4);
    CHECK(r.falseCount == 2);
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(r.counterexamples[0].instance == std::vector<std::string>{"a", "a"});
    auto holes = loadFiniteTable(data("holes.tbl"));
    CHECK_THROWS_AS(checkLaw(holes, Law::Law1, all), NoDesignatedCombinators);
}

TEST_CASE("laws parse and have arities") {
    CHECK(parseLaw("0") == Law::Law0);
    CHECK(parseLaw("law2") == Law::Law2);
    CHECK_FALSE(parseLaw("3").has_value());
    CHECK(arity(Law::Law0) == 2);
    CHECK(arity(Law::Law1) == 3);
    CHECK(arity(Law::Law2) == 2);
}

TEST_CASE("model N") {
    auto n = modelN();
    Budget b;
    CHECK(n->apply(Term::k(), parse("a"), b).value() == parse("k a"));
    CHECK(n->apply(parse("s omega i"), parse("x"), b).value() == parse("x x x"));
    CHECK(n->apply(w, parse("y"), b).value() == parse("y y"));
    auto ww = n->apply(w, w, b);
    REQUIRE(ww.isAbsent());
    CHECK(ww.absence().certificate != nullptr);

    NormalFormModel bare(b, std::make_shared<DivergenceRegistry>());
    CHECK(bare.apply(w, w, b).isIndeterminate());

    CHECK(n->contains(parse("s k")) == Truth3::True);
    CHECK(n->contains(parse("k a b")) == Truth3::False);
    CHECK(n->contains(parse("#e")) == Truth3::False);
    CHECK(evalPoly(*n, parse("omega x"), {{"x", parse("y")}}, b).value() == parse("y y"));
}

TEST_CASE("L membership") {
    CHECK(lMembership(w) == Truth3::True);
    CHECK(lMembership(parse("k omega")) == Truth3::True);
    CHECK(lMembership(terms::sOmegaI()) == Truth3::True);
    CHECK(lMembership(parse("k (s omega i)")) == Truth3::True);
    CHECK(lMembership(parse("y")) == Truth3::True);
    CHECK(lMembership(terms::killer()) == Truth3::False);
    CHECK(lMembership(terms::d()) == Truth3::False);
    CHECK_THROWS_AS(lMembership(parse("k a b")), NotANormalForm);
}

TEST_CASE("left-passivity certificates in N") {
    auto n = modelN();
    for (const Term& t : {terms::d(), terms::killer()}) {
        auto c = leftPassiveCertificate(*n, t, {}, n->registry());
        REQUIRE(c);
        CHECK(c->kind() == "closed-reduct");
        CHECK(verifyCertificate(*c, n->registry()));
        CHECK(oracle::replay(*c, n->registry()));
    }
    CHECK_FALSE(leftPassiveCertificate(*n, w, {}, n->registry()));
}

TEST_CASE("restrict and N'") {
    auto np = modelNPrime();
    Budget b;
    CHECK(np->contains(terms::d()) == Truth3::True);
    CHECK(np->contains(terms::killer()) == Truth3::False);
    CHECK(np->contains(w) == Truth3::True);

    auto partial = np->apply(Term::s(), parse("k (s omega i)"), b);
    REQUIRE(partial.isPresent());
    auto full = np->apply(partial.value(), parse("k omega"), b);
    CHECK(full.isAbsent());
    // in N the same product exists
    CHECK(modelN()->apply(partial.value(), parse("k omega"), b).value() == terms::killer());

    auto unsure = restrict(modelN(), [](const Element&) { return Truth3::Unknown; });
    CHECK(unsure->apply(Term::k(), parse("a"), b).isIndeterminate());
}

TEST_CASE("laws in N and N'") {
    auto np = modelNPrime();
    auto r0 = checkLaw(*np, Law::Law0, {false, 200, 1});
    CHECK(r0.falseCount > 0);
    bool killer = false;
    for (const auto& c : r0.counterexamples)
        killer = killer || c.instance == std::vector<std::string>{"k (s (s (s k k) (s k k)) (s k k))", "k (s (s k k) (s k k))"};
    CHECK(killer);
    CHECK(checkLawInstance(*np, Law::Law0, {parse("k (s omega i)"), parse("k omega")}, {}) == Truth3::False);

    // Under strict evaluation law (1) fails in N: s k omega omega is omega,
    // while k omega (omega omega) has an undefined argument.
    auto n = modelN();
    CHECK(checkLawInstance(*n, Law::Law1, {Term::k(), w, w}, {}) == Truth3::False);
    CHECK(checkLawInstance(*np, Law::Law1, {Term::k(), w, w}, {}) == Truth3::False);
    CHECK(checkLawInstance(*n, Law::Law2, {w, w}, {}) == Truth3::True);
}

TEST_CASE("completeness on finite models") {
    auto one = loadFiniteTable(data("one.tbl"));
    auto r = completenessCheckFinite(one, 4, 2);
    CHECK(r.lawsHold);
    CHECK(r.total);
    CHECK(r.passed());
    CHECK(r.polynomials > 0);
    CHECK(r.nullaryDefined > 0);

    auto broken = loadFiniteTable(data("law2_broken.tbl"));
    auto rb = completenessCheckFinite(broken, 3, 1);
    CHECK_FALSE(rb.lawsHold);
    CHECK_FALSE(rb.failures.empty());

    auto single = loadFiniteTable(data("single_hole.tbl"));
    CHECK_THROWS_AS(completenessCheckFinite(single, 2, 1), MissingLeftPassive);
    CHECK_THROWS_AS(completenessCheckFinite(*modelN(), 2, 1), NotFinite);
}
