#include "gdlog/errors.hpp"
#include "gdlog/rational.hpp"

#include <doctest.h>

using namespace gdlog;

TEST_CASE("decimal literals parse to exact rationals") {
    CHECK(ratFromString("0.1") == Rat(1, 10));
    CHECK(ratFromString("0.5") == Rat(1, 2));
    CHECK(ratFromString("2.25") == Rat(9, 4));
    CHECK(ratFromString("-0.1") == Rat(-1, 10));
}

TEST_CASE("fraction and integer literals") {
    CHECK(ratFromString("19/100") == Rat(19, 100));
    CHECK(ratFromString("4/8") == Rat(1, 2));
    CHECK(ratFromString("7") == Rat(7));
    CHECK(ratFromString("-3/2") == Rat(-3, 2));
}

TEST_CASE("malformed literals are rejected") {
    CHECK_THROWS_AS(ratFromString(""), InputError);
    CHECK_THROWS_AS(ratFromString("1/0"), InputError);
    CHECK_THROWS_AS(ratFromString("1.2.3"), InputError);
    CHECK_THROWS_AS(ratFromString("a"), InputError);
    CHECK_THROWS_AS(ratFromString("1/2/3"), InputError);
}

TEST_CASE("rendering is canonical") {
    CHECK(ratToString(Rat(19, 100)) == "19/100");
    CHECK(ratToString(ratFromString("4/8")) == "1/2");
    CHECK(ratToString(Rat(4, 8)) == "1/2"); // non-canonical inputs normalize
    CHECK(ratToString(Rat(7)) == "7");
    CHECK(ratToString(Rat(0)) == "0");
}

TEST_CASE("network resilience arithmetic is exact") {
    Rat p = ratFromString("0.1");
    Rat survive = (1 - p) * (1 - p);
    CHECK(survive == Rat(81, 100));
    CHECK(1 - survive == Rat(19, 100));
}
