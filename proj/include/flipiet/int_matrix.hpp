#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "flipiet/numeric.hpp"
#include "flipiet/rauzy_path.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// Square matrix of arbitrary-precision integers. Element access is 0-based
// (row, col); the transition-matrix formulas below are written 1-based.
class IntMatrix {
 public:
  explicit IntMatrix(int n);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit IntMatrix(std::vector<std::vector<BigInt>> rows);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  BigInt& operator()(int row, int col) { return entries_[row * n_ + col]; }
  const BigInt& operator()(int row, int col) const { return entries_[row * n_ + col]; }

  bool is_nonnegative() const;
  bool is_positive() const;
  BigInt determinant() const;

  // A * v for a vector of lengths in either backend.
  template <class Num>
  std::vector<Num> apply(const std::vector<Num>& v) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<BigInt> entries_;
};

// Zero/nonzero pattern of a nonnegative matrix, one 64-bit row mask per row.
class BoolMatrix {
 public:
  explicit BoolMatrix(int n) : n_(n), rows_(n, 0) {}
  static BoolMatrix pattern_of(const IntMatrix& a);
  static BoolMatrix identity(int n);

  int size() const { return n_; }
  bool get(int row, int col) const { return rows_[row] >> col & 1u; }
  void set(int row, int col) { rows_[row] |= std::uint64_t{1} << col; }
  bool is_positive() const;

  BoolMatrix operator*(const BoolMatrix& rhs) const;
  bool operator==(const BoolMatrix& other) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

// M_a(p) = E + E_{n, pi^{-1}(n)}.
IntMatrix matrix_a(const SignedPermutation& p);
// M_b(p) = sum_{i <= k} E_ii + E_{n,s} + sum_{k <= i <= n-1} E_{i,i+1} with
// k = pi^{-1}(n) and s = k + (1 + theta_k)/2. Throws std::invalid_argument when
// pi(n) = n and theta_n = +1 (then s = n + 1 is not an index).
IntMatrix matrix_b(const SignedPermutation& p);
IntMatrix transition_matrix(const SignedPermutation& p, RauzyType t);

// M^{(i)} = M_{t_1}(p(0)) ... M_{t_i}(p(i-1)). Throws std::out_of_range unless
// 1 <= i <= path.length().
IntMatrix path_product(const RauzyPath& path, int i);

struct PositivityWitness {
  bool eventually_positive = false;
  std::optional<int> exponent;  // least k with A^k > 0
};

// Wielandt bound n^2 - 2n + 2 on the primitivity exponent.
int wielandt_bound(int n);

// Boolean powering up to the Wielandt bound. Throws std::invalid_argument on a
// negative entry.
PositivityWitness is_eventually_positive(const IntMatrix& a);
PositivityWitness is_eventually_positive(const BoolMatrix& a);

// ---- template implementation ----

template <class Num>
std::vector<Num> IntMatrix::apply(const std::vector<Num>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<Num> out(n_, Num(0));
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const BigInt& e = (*this)(r, c);
      if (e == 0) continue;
      if constexpr (std::is_same_v<Num, Rational>) {
        out[r] += Rational(e) * v[c];
      } else {
        out[r] += e.template convert_to<Num>() * v[c];
      }
    }
  }
  return out;
}

}  // namespace flipiet
