#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flipiet/numeric.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

enum class Space { interval, circle };

std::string_view space_name(Space s);

// An interval (or circle) exchange map E(lambda, p) on [0, |lambda|).
//
// Domain breakpoints a_0 < ... < a_n with a_i = lambda_1 + ... + lambda_i; range
// breakpoints b_j = sum_{k <= j} lambda_{pi^{-1}(k)}. Interval I_i = (a_{i-1}, a_i)
// is carried isometrically onto J_{pi(i)} = (b_{pi(i)-1}, b_{pi(i)}), reversing
// orientation when theta_i = -1. A circle map uses the same data with 0 ~ |lambda|.
template <class Num>
class ExchangeMap {
 public:
  ExchangeMap(std::vector<Num> lengths, SignedPermutation perm, Space space = Space::interval)
      : lengths_(std::move(lengths)), perm_(std::move(perm)), space_(space) {
    const int n = perm_.size();
    if (static_cast<int>(lengths_.size()) != n) {
      throw std::invalid_argument("dimension mismatch: " + std::to_string(lengths_.size()) +
                                  " lengths for a permutation of " + std::to_string(n) + " symbols");
    }
    for (const Num& l : lengths_) {
      if (!(l > 0)) throw std::invalid_argument("interval lengths must be strictly positive");
    }
    domain_.assign(n + 1, Num(0));
    range_.assign(n + 1, Num(0));
    for (int i = 1; i <= n; ++i) {
      domain_[i] = domain_[i - 1] + lengths_[i - 1];
      range_[i] = range_[i - 1] + lengths_[perm_.position_of(i) - 1];
    }
    offsets_.resize(n);
    for (int i = 1; i <= n; ++i) {
      const int j = perm_.symbol(i);
      // T(x) = theta_i x + offset_i on I_i
      offsets_[i - 1] = perm_.sign(i) == 1 ? Num(range_[j - 1] - domain_[i - 1]) : Num(range_[j] + domain_[i - 1]);
    }
  }

  int interval_count() const { return perm_.size(); }
  int flip_count() const { return perm_.flip_count(); }
  const std::vector<Num>& lengths() const { return lengths_; }
  const SignedPermutation& perm() const { return perm_; }
  Space space() const { return space_; }
  const Num& total_length() const { return domain_.back(); }

  const std::vector<Num>& domain_breakpoints() const { return domain_; }
  const std::vector<Num>& range_breakpoints() const { return range_; }

  // On I_i (1-based): T(x) = slope(i) * x + offset(i).
  int slope(int i) const { return perm_.sign(i); }
  const Num& offset(int i) const { return offsets_[i - 1]; }

  // Index i with x in the open interval I_i, or 0 when x is a breakpoint or
  // outside [0, |lambda|]. The float backend treats points within 1e-12 of a
  // breakpoint as breakpoints.
  int interval_containing(const Num& x) const {
    const int n = interval_count();
    if (!(x > domain_.front()) || !(x < domain_.back())) return 0;
    auto it = std::upper_bound(domain_.begin(), domain_.end(), x);
    const int i = static_cast<int>(it - domain_.begin());
    if (i < 1 || i > n) return 0;
    if (NumTraits<Num>::same_point(x, domain_[i - 1]) || NumTraits<Num>::same_point(x, domain_[i])) return 0;
    return i;
  }

  // T(x), or nullopt when x is not in Dom(T). Circle maps reduce x modulo |lambda|.
  std::optional<Num> evaluate(Num x) const {
    if (space_ == Space::circle) x = wrap(x);
    const int i = interval_containing(x);
    if (i == 0) return std::nullopt;
    return Num(slope(i) * x + offsets_[i - 1]);
  }

  Num wrap(Num x) const {
    const Num& len = total_length();
    while (x < 0) x += len;
    while (!(x < len)) x -= len;
    return x;
  }

  ExchangeMap scaled(const Num& factor) const {
    std::vector<Num> l = lengths_;
    for (auto& x : l) x *= factor;
    return ExchangeMap(std::move(l), perm_, space_);
  }

  ExchangeMap normalized() const { return scaled(Num(1) / total_length()); }

  ExchangeMap with_space(Space s) const { return ExchangeMap(lengths_, perm_, s); }

  template <class Other>
  ExchangeMap<Other> convert() const {
    std::vector<Other> l;
    l.reserve(lengths_.size());
    for (const auto& x : lengths_) {
      if constexpr (std::is_same_v<Other, Num>) {
        l.push_back(x);
      } else if constexpr (std::is_same_v<Num, Rational>) {
        l.push_back(NumTraits<Rational>::to_real(x));
      } else {
        l.push_back(NumTraits<Rational>::from_real(x));
      }
    }
    return ExchangeMap<Other>(std::move(l), perm_, space_);
  }

  bool operator==(const ExchangeMap& other) const {
    return space_ == other.space_ && perm_ == other.perm_ && lengths_ == other.lengths_;
  }

 private:
  std::vector<Num> lengths_;
  SignedPermutation perm_;
  Space space_;
  std::vector<Num> domain_;
  std::vector<Num> range_;
  std::vector<Num> offsets_;
};

inline std::string_view space_name(Space s) { return s == Space::circle ? "circle" : "interval"; }

}  // namespace flipiet
