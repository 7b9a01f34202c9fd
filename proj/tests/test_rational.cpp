#include <catch2/catch_amalgamated.hpp>

#include "mstk/errors.hpp"
#include "mstk/rational.hpp"

using namespace mstk;

TEST_CASE("parse_rational accepts integers and fractions", "[rational]") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("123456789012345678901234567890/7") ==
          Rational(BigInt("123456789012345678901234567890"), BigInt(7)));
}

TEST_CASE("parse_rational rejects malformed input", "[rational]") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("a"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(parse_rational("/2"), InputError);
    CHECK_THROWS_AS(parse_rational("3 /4"), InputError);
    CHECK_THROWS_AS(parse_rational("+3"), InputError);
}

TEST_CASE("format_rational prints canonical forms", "[rational]") {
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(8, 4)) == "2");
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(-6, 3)) == "-2");
}

TEST_CASE("parse and format are inverse on canonical text", "[rational]") {
    for (const char* text : {"0", "1", "-1", "3/4", "-3/4", "22/7", "1000000/999999"}) {
        CHECK(format_rational(parse_rational(text)) == text);
    }
}

TEST_CASE("rational_pow handles positive, zero and negative exponents", "[rational]") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), 0) == Rational(1));
    CHECK(rational_pow(Rational(0), 0) == Rational(1));
    CHECK(rational_pow(Rational(1, 2), -2) == Rational(4));
    CHECK(rational_pow(Rational(-2), 3) == Rational(-8));
    CHECK(rational_pow(Rational(-2), 2) == Rational(4));
    CHECK(rational_pow(Rational(0), 5) == Rational(0));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), ParameterError);
}

TEST_CASE("rational_abs", "[rational]") {
    CHECK(rational_abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(rational_abs(Rational(5, 3)) == Rational(5, 3));
    CHECK(rational_abs(Rational(0)) == Rational(0));
}
