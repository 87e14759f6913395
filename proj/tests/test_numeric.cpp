#include "doctest.h"

#include <cstdlib>

#include "flipiet/numeric.hpp"

using namespace flipiet;

TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("+2.5E1") == Rational(25));
  CHECK(parse_rational(".5") == Rational(1, 2));
  // leading zeros are decimal, not an octal prefix
  CHECK(parse_rational("010/3") == Rational(10, 3));
  CHECK(parse_rational("0.0625") == Rational(1, 16));
  CHECK(parse_bigint("-007") == BigInt(-7));
  CHECK(parse_bigint("0") == BigInt(0));
  CHECK_THROWS_AS(parse_bigint("0x10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("from_real is exact for dyadic values") {
  CHECK(NumTraits<Rational>::from_real(0.375L) == Rational(3, 8));
  CHECK(NumTraits<Rational>::from_real(-2.0L) == Rational(-2));
  CHECK(NumTraits<Rational>::from_real(0.0L) == Rational(0));
  // 0.1 is not dyadic; the conversion must round-trip to the same long double
  const Real x = 0.1L;
  CHECK(NumTraits<Rational>::to_real(NumTraits<Rational>::from_real(x)) == x);
  CHECK_THROWS(NumTraits<Rational>::from_real(std::numeric_limits<Real>::infinity()));
}

TEST_CASE("decimal text round-trips long doubles bit for bit") {
  for (Real x : {0.1L, 1.0L / 3.0L, 6.2222625231203967803L, 1e-300L, 123456789.125L}) {
    CHECK(parse_decimal(to_decimal(x)) == x);
  }
  CHECK_THROWS_AS(parse_decimal("0.1x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
}

TEST_CASE("rationalize rounds to the nearest multiple of 1/denominator") {
  CHECK(rationalize(0.3333L, BigInt(3)) == Rational(1, 3));
  CHECK(rationalize(0.26L, BigInt(4)) == Rational(1, 4));
  const Rational r = rationalize(0.35220113L, BigInt(1000000000000LL));
  CHECK(boost::multiprecision::denominator(r) <= BigInt(1000000000000LL));
  CHECK(std::fabs(NumTraits<Rational>::to_real(r) - 0.35220113L) <= 1e-12L);
}

TEST_CASE("float boundary test is relative, point test absolute") {
  CHECK(NumTraits<Real>::same_length(1.0L, 1.0L + 1e-13L));
  CHECK_FALSE(NumTraits<Real>::same_length(1e-6L, 1e-6L + 1e-15L));
  CHECK(NumTraits<Real>::same_point(0.5L, 0.5L + 5e-13L));
  CHECK_FALSE(NumTraits<Real>::same_point(0.5L, 0.5L + 1e-11L));
}

TEST_CASE("FLIPIET_TOLERANCE overrides the default tolerance") {
  ::unsetenv("FLIPIET_TOLERANCE");
  CHECK(default_tolerance(1e-3L) == 1e-3L);
  ::setenv("FLIPIET_TOLERANCE", "2.5e-4", 1);
  CHECK(default_tolerance(1e-3L) == 2.5e-4L);
  ::setenv("FLIPIET_TOLERANCE", "junk", 1);
  CHECK(default_tolerance(1e-3L) == 1e-3L);
  ::unsetenv("FLIPIET_TOLERANCE");
}
