#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace flipiet {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Float backend. On x86-64 this carries a 64-bit mantissa.
using Real = long double;

enum class Backend { exact, floating };

std::string_view backend_name(Backend b);

// Tolerances used by the float backend. The exact backend always compares
// with true equality.
inline constexpr Real kBoundaryRelTolerance = 1e-12L;
inline constexpr Real kPointTolerance = 1e-12L;
inline constexpr Real kDefaultEigenTolerance = 1e-14L;

template <class Num>
struct NumTraits;

template <>
struct NumTraits<Real> {
  static constexpr Backend backend = Backend::floating;

  // Two lengths count as equal (Rauzy domain boundary) within a relative
  // tolerance of 1e-12.
  static bool same_length(Real x, Real y) {
    const Real scale = std::fmax(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) <= kBoundaryRelTolerance * scale;
  }
  static bool same_point(Real x, Real y) { return std::fabs(x - y) <= kPointTolerance; }
  // Smallest piece length worth splitting off when refining partitions.
  static Real split_slack(Real total) { return kPointTolerance * total; }
  static Real to_real(Real x) { return x; }
  static Real from_real(Real x) { return x; }
};

template <>
struct NumTraits<Rational> {
  static constexpr Backend backend = Backend::exact;

  static bool same_length(const Rational& x, const Rational& y) { return x == y; }
  static bool same_point(const Rational& x, const Rational& y) { return x == y; }
  static Rational split_slack(const Rational&) { return Rational(0); }
  static Real to_real(const Rational& x) { return x.convert_to<Real>(); }
  static Rational from_real(Real x);
};

// Shortest decimal text that parses back to the identical long double.
std::string to_decimal(Real x);
Real parse_decimal(std::string_view text);

// Exact value of "p/q", an integer, or a decimal such as "-0.125e2".
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& x);
// Base-10 only: optional sign, then digits. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);
std::string to_string(const Rational& x);

// Nearest rational with the given denominator (used to exactify float
// lengths, e.g. at 1e-12 accuracy with denominator 10^12).
Rational rationalize(Real x, const BigInt& denominator);

// Global default tolerance, overridable through FLIPIET_TOLERANCE.
Real default_tolerance(Real fallback);

}  // namespace flipiet
