#include "flipiet/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace flipiet {

std::string_view backend_name(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

Rational NumTraits<Rational>::from_real(Real x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot convert non-finite value to rational");
  // Binary floating point values are dyadic rationals, so the conversion is exact.
  const bool negative = x < 0;
  int exponent = 0;
  Real mantissa = std::frexp(std::fabs(x), &exponent);
  constexpr int kBits = 64;
  mantissa = std::ldexp(mantissa, kBits);
  exponent -= kBits;
  BigInt m(static_cast<unsigned long long>(mantissa));
  if (negative) m = -m;
  Rational r(m);
  if (exponent > 0) {
    r *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    r /= Rational(BigInt(1) << -exponent);
  }
  return r;
}

std::string to_decimal(Real x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("decimal formatting failed");
  return std::string(buf, ptr);
}

Real parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  char* end = nullptr;
  Real v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("malformed decimal: " + s);
  return v;
}

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
  if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  // GMP reads a leading 0 as an octal prefix
  body.remove_prefix(std::min(body.find_first_not_of('0'), body.size() - 1));
  const BigInt x{std::string(body)};
  return text[0] == '-' ? BigInt(-x) : x;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto fail = [&] { return std::invalid_argument("malformed rational: " + s); };
  if (s.empty()) throw fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      const BigInt num = parse_bigint(s.substr(0, slash));
      const BigInt den = parse_bigint(s.substr(slash + 1));
      if (den == 0) throw fail();
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw fail();
    }
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.' && !seen_point) {
      seen_point = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      seen_digit = true;
      if (seen_point) ++scale;
    } else {
      throw fail();
    }
  }
  if (!seen_digit) throw fail();
  long exponent = 0;
  if (i < s.size()) {
    const std::string e = s.substr(i + 1);
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
    if (e.empty() || ec != std::errc{} || ptr != e.data() + e.size()) throw fail();
  }
  exponent -= scale;
  if (exponent > 100000 || exponent < -100000) throw fail();
  Rational r{parse_bigint(digits)};
  BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  if (exponent > 0) r *= Rational(ten_power);
  if (exponent < 0) r /= Rational(ten_power);
  return negative ? Rational(-r) : r;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

Rational rationalize(Real x, const BigInt& denominator) {
  // round(x * den) computed exactly from the dyadic value of x
  Rational scaled = NumTraits<Rational>::from_real(x) * Rational(denominator);
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  BigInt q = (2 * num + den) / (2 * den);
  if (2 * num + den < 0 && (2 * num + den) % (2 * den) != 0) q -= 1;
  return Rational(q, denominator);
}

Real default_tolerance(Real fallback) {
  if (const char* env = std::getenv("FLIPIET_TOLERANCE")) {
    try {
      Real v = parse_decimal(env);
      if (v > 0) return v;
    } catch (const std::invalid_argument&) {
    }
  }
  return fallback;
}

}  // namespace flipiet
