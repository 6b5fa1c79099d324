#include <doctest.h>

#include <pargoid/partiality.hpp>

using namespace pargoid;

namespace {
using PV = PartialValue<int>;
const PV a = PV::present(1);
const PV b = PV::present(2);
const PV gone = PV::absent("hole");
const PV unknown = PV::indeterminate("budget");
} // namespace

TEST_CASE("strong Kleene connectives") {
    CHECK((Truth3::True && Truth3::Unknown) == Truth3::Unknown);
    CHECK((Truth3::False && Truth3::Unknown) == Truth3::False);
    CHECK((Truth3::True || Truth3::Unknown) == Truth3::True);
    CHECK((Truth3::False || Truth3::Unknown) == Truth3::Unknown);
    CHECK(!Truth3::Unknown == Truth3::Unknown);
    CHECK(!Truth3::True == Truth3::False);
    CHECK(toString(Truth3::Unknown) == "unknown");
}

TEST_CASE("kleeneEqual") {
    CHECK(kleeneEqual(a, a) == Truth3::True);
    CHECK(kleeneEqual(a, b) == Truth3::False);
    CHECK(kleeneEqual(gone, gone) == Truth3::True);
    CHECK(kleeneEqual(a, gone) == Truth3::False);
    CHECK(kleeneEqual(gone, a) == Truth3::False);
    CHECK(kleeneEqual(a, unknown) == Truth3::Unknown);
    CHECK(kleeneEqual(unknown, gone) == Truth3::Unknown);
    CHECK(kleeneEqual(unknown, unknown) == Truth3::Unknown);
}

TEST_CASE("hoare conditional") {
    CHECK(hoare(a, Truth3::True, b).value() == 1);
    CHECK(hoare(a, Truth3::False, b).value() == 2);
    CHECK(hoare(a, Truth3::Unknown, b).isIndeterminate());
    CHECK(hoare(a, Truth3::False).isAbsent());
    CHECK(hoare(a, Truth3::True).value() == 1);
}

TEST_CASE("strictJoin") {
    auto sum = [](const std::vector<int>& xs) { return xs[0] + xs[1]; };
    CHECK((strictJoin<int, int>({a, b}, sum).value()) == 3);
    CHECK((strictJoin<int, int>({a, gone}, sum).isAbsent()));
    CHECK((strictJoin<int, int>({unknown, gone}, sum).isAbsent()));
    CHECK((strictJoin<int, int>({a, unknown}, sum).isIndeterminate()));
    CHECK((strictJoin<int, int>({a, gone}, sum).absence().reason) == "hole");
}

TEST_CASE("withoutValue keeps the status") {
    CHECK(gone.withoutValue<std::string>().isAbsent());
    CHECK(unknown.withoutValue<std::string>().isIndeterminate());
}
