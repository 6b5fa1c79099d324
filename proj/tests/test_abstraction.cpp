#include <doctest.h>

#include <pargoid/abstraction.hpp>
#include <pargoid/errors.hpp>

using namespace pargoid;

namespace {

const Term w = terms::omega();

std::string data(const char* name) { return std::string(PARGOID_TEST_DATA) + "/" + name; }

} // namespace

TEST_CASE("lambdaStar clauses") {
    auto r = lambdaStar("x", parse("x"));
    CHECK(r.result == parse("s k k"));
    CHECK(r.clauseTrace == std::vector<AbstractionClause>{AbstractionClause::Identity});

    r = lambdaStar("x", parse("y"));
    CHECK(r.result == parse("k y"));
    CHECK(r.clauseTrace == std::vector<AbstractionClause>{AbstractionClause::Constant});

    r = lambdaStar("x", parse("x x"));
    CHECK(r.result == w);
    CHECK(r.clauseTrace.size() == 3);
    CHECK(r.clauseTrace[0] == AbstractionClause::Split);

    CHECK(lambdaStar("x", Term::k()).result == parse("k k"));
    // x absent wins over splitting
    CHECK(lambdaStar("x", parse("y z")).result == parse("k (y z)"));
    CHECK(toString(AbstractionClause::Split) == "split");
}

TEST_CASE("lambdaStarMulti") {
    CHECK(lambdaStarMulti({"x"}, parse("x")) == parse("s k k"));
    CHECK(lambdaStarMulti({"x", "y"}, parse("x")) == lambdaStar("x", parse("k x")).result);
    CHECK(lambdaStarMulti({"x", "y"}, parse("x")) == parse("s (k k) (s k k)"));
    CHECK_THROWS_AS(lambdaStarMulti({"x", "x"}, parse("x")), DuplicateVariable);
    CHECK_THROWS_AS(lambdaStarMulti({}, parse("x")), std::invalid_argument);
}

TEST_CASE("lambdaStarProperty in N") {
    auto n = modelN();
    for (const Term& b : {Term::s(), Term::k(), terms::i(), w})
        CHECK(lambdaStarProperty(*n, parse("x"), "x", {}, b, {}) == Truth3::True);
    CHECK(lambdaStarProperty(*n, parse("y (k y)"), "x", {{"y", Term::k()}}, Term::s(), {}) == Truth3::True);

    // both sides are omega omega, which does not exist
    CHECK(lambdaStarProperty(*n, parse("x x"), "x", {}, w, {}) == Truth3::True);
    // strict evaluation: k s (omega omega) is undefined, the abstraction
    // applied to omega is not
    CHECK(lambdaStarProperty(*n, parse("k s (x x)"), "x", {}, w, {}) == Truth3::False);
}

TEST_CASE("domainEmpty and witness") {
    auto holes = loadFiniteTable(data("holes.tbl"));
    CHECK(domainEmpty(holes, {parse("#c x"), {"x"}}, {}) == Truth3::True);
    CHECK(domainEmpty(holes, {parse("#a x"), {"x"}}, {}) == Truth3::False);
    CHECK(domainEmpty(*modelN(), {parse("x"), {"x"}}, {}) == Truth3::False);
    CHECK(domainEmpty(*modelN(), {parse("omega omega x"), {"x"}}, {}) == Truth3::Unknown);

    const Term lp = Term::elem("c");
    CHECK(witness(holes, parse("#c x"), {"x"}, Truth3::True, lp, {}).value() == lp);
    CHECK(witness(holes, parse("#c x"), {"x"}, Truth3::Unknown, lp, {}).isIndeterminate());
    CHECK_THROWS_AS(witness(holes, parse("#c x"), {"x"}, Truth3::True, std::nullopt, {}), MissingLeftPassive);

    auto one = loadFiniteTable(data("one.tbl"));
    CHECK(witness(one, parse("x x"), {"x"}, Truth3::False, std::nullopt, {}).value() == Term::elem("e"));
    auto n = modelN();
    CHECK(witness(*n, parse("x x"), {"x"}, Truth3::False, std::nullopt, {}).value() == w);
}

TEST_CASE("lemma1LeftPassive") {
    auto n = modelN();
    CHECK(lemma1LeftPassive(*n, w, w) == terms::d());
    CHECK(lemma1LeftPassive(*n, terms::sOmegaI(), w) == terms::killer());
    CHECK_THROWS_AS(lemma1LeftPassive(*n, Term::k(), w), WitnessNotUndefined);

    auto single = loadFiniteTable(data("single_hole.tbl"));
    try {
        lemma1LeftPassive(single, Term::elem("q"), Term::elem("p"));
        FAIL("expected PrerequisiteUndefined");
    } catch (const PrerequisiteUndefined& e) {
        CHECK(std::string(e.what()) == "k b is not defined");
    }
    auto built = loadFiniteTable(data("lemma1.tbl"));
    Element d = lemma1LeftPassive(built, Term::elem("a"), Term::elem("b"));
    CHECK(d == Term::elem("d"));
    CHECK(isLeftPassiveExhaustive(built, d));

    auto holes = loadFiniteTable(data("holes.tbl"));
    CHECK_THROWS_AS(lemma1LeftPassive(holes, Term::elem("a"), Term::elem("b")), NoDesignatedCombinators);
}

TEST_CASE("sweep candidates") {
    auto np = modelNPrime();
    auto s = prop53Candidate(*np, Term::s(), {});
    CHECK(s.status == "eliminated");
    CHECK(s.eliminatedBy == "(i)");
    CHECK(s.instance == "x=k(s omega i), y=k omega");

    auto k = prop53Candidate(*np, Term::k(), {});
    CHECK(k.status == "eliminated");
    CHECK(k.eliminatedBy == "(ii)");
    CHECK(k.instance == "generic");

    auto r = prop53Search(4);
    CHECK(r.count("survivor") == 0);
    CHECK(r.count("eliminated") == r.entries.size());
    CHECK(r.closedNormalForms == r.entries.size() + r.excludedFromNPrime);
}
