#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pds/errors.hpp"
#include "pds/rational.hpp"

using namespace pds;

TEST_CASE("canonical form") {
    Rational r(2, 6);
    CHECK(r.num() == 1);
    CHECK(r.den() == 3);
    Rational s(3, -6);
    CHECK(s.num() == -1);
    CHECK(s.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).num() == -1);
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), domain_error);
}

TEST_CASE("floor and frac") {
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(Rational(4).frac() == Rational(0));
    CHECK(Rational(4).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("string round trip") {
    CHECK(Rational::from_string("-22/7").to_string() == "-22/7");
    CHECK(Rational::from_string("5").to_string() == "5");
    CHECK(Rational::from_string(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("x"), parse_error);
}
