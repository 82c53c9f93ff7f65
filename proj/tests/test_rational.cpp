#include <doctest.h>

#include "cld/errors.hpp"
#include "cld/rational.hpp"

using cld::Rational;

TEST_CASE("parsing accepts integers and fractions, reduced or not") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("0").str() == "0");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("-1/2").str() == "-1/2");
  CHECK(Rational::parse("+1/2").str() == "1/2");
  CHECK(Rational::parse("-0").str() == "0");
  // arbitrary precision round-trips
  CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), cld::Error);
  CHECK_THROWS_AS(Rational::parse("a"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("1/"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("/2"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), cld::Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), cld::Error);
  CHECK_THROWS_AS(Rational::parse(" 1"), cld::Error);
}

TEST_CASE("arithmetic is exact and canonical") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(2) == Rational(1, 4));
  CHECK(Rational(1, -2).str() == "-1/2"); // canonical sign
  CHECK(Rational(-4, -8).str() == "1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), cld::Error);
  CHECK_THROWS_AS(Rational(1, 0), cld::Error);
}

TEST_CASE("comparison, abs and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5).sign() == 1);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(3, 8).decimal(3) == "0.375");
  CHECK(Rational(2, 3).decimal(4) == "0.6667");
  CHECK(Rational(-1, 8).decimal(1) == "-0.1");
  CHECK(Rational(1, 2).decimal(0) == "1");
  CHECK(Rational(1, 8).decimal(0) == "0");
  CHECK(Rational(5, 4).decimal(2) == "1.25");
  CHECK(Rational(0).decimal(2) == "0.00");
}
