#include <doctest.h>

#include "apportion/error.hpp"
#include "apportion/rational.hpp"

using apportion::ApportionError;
using apportion::BigInt;
using apportion::ErrorCode;
using apportion::Rational;

TEST_SUITE("rational") {

TEST_CASE("parse decimals and fractions") {
  CHECK(Rational::parse("65.91") == Rational(6591, 100));
  CHECK(Rational::parse("0.521") == Rational(521, 1000));
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("-.5") == Rational(-1, 2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("7") == Rational(7));
}

TEST_CASE("leading zeros are decimal, not octal") {
  CHECK(Rational::parse("066.075") == Rational(66075, 1000));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("0.0801") == Rational(801, 10000));
  CHECK(apportion::parse_integer("0017") == BigInt(17));
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "1.2.3", "abc", "1/0", "1e5", "--1", "."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ApportionError);
  }
  CHECK_THROWS_AS(Rational::parse_decimal("1/2"), ApportionError);
  try {
    apportion::parse_integer("12x");
    FAIL("expected an exception");
  } catch (const ApportionError& e) {
    CHECK(e.code() == ErrorCode::MalformedDecimal);
  }
}

TEST_CASE("lowest terms and ordering") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(a.floor() == -2);
  CHECK(a.ceil() == -1);
  CHECK(a.abs() == Rational(3, 2));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(2, 3).to_decimal(3, Rational::Rounding::Truncate) == "0.666");
  CHECK(Rational(2, 3).to_decimal(3) == "0.667");
  CHECK(Rational(-1, 2).to_decimal(2) == "-0.50");
  CHECK(Rational(5).to_decimal(0) == "5");
  // 320 of 637 votes at M = 37
  const Rational q(320 * 37, 637);
  CHECK(q.to_decimal(6, Rational::Rounding::Truncate) == "18.587127");
  CHECK(q.to_string() == "11840/637");
}

TEST_CASE("values beyond 64 bits") {
  const Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK(big * Rational(7) == Rational(BigInt("123456789012345678901234567890")));
  CHECK_THROWS_AS(apportion::to_int64(BigInt("123456789012345678901234567890")), std::overflow_error);
}

}
