#include "flipiet/int_matrix.hpp"

#include <stdexcept>

namespace flipiet {

IntMatrix::IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, BigInt(0)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix must be square");
    int c = 0;
    for (long long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix::IntMatrix(std::vector<std::vector<BigInt>> rows) : IntMatrix(static_cast<int>(rows.size())) {
  for (int r = 0; r < n_; ++r) {
    if (static_cast<int>(rows[r].size()) != n_) throw std::invalid_argument("matrix must be square");
    for (int c = 0; c < n_; ++c) (*this)(r, c) = std::move(rows[r][c]);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& e : entries_) {
    if (e < 0) return false;
  }
  return true;
}

bool IntMatrix::is_positive() const {
  for (const auto& e : entries_) {
    if (e <= 0) return false;
  }
  return true;
}

BigInt IntMatrix::determinant() const {
  // Fraction-free Bareiss elimination.
  std::vector<BigInt> a = entries_;
  auto at = [&](int r, int c) -> BigInt& { return a[r * n_ + c]; };
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n_; ++r) {
        if (at(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n_; ++r) {
      for (int c = k + 1; c < n_; ++c) {
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const BigInt& e = (*this)(r, k);
      if (e == 0) continue;
      for (int c = 0; c < n_; ++c) out(r, c) += e * rhs(k, c);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (int r = 0; r < n_; ++r) {
    if (r) s += ',';
    s += '[';
    for (int c = 0; c < n_; ++c) {
      if (c) s += ',';
      s += (*this)(r, c).str();
    }
    s += ']';
  }
  return s + "]";
}

BoolMatrix BoolMatrix::pattern_of(const IntMatrix& a) {
  if (a.size() > 64) throw std::invalid_argument("boolean pattern supports n <= 64");
  BoolMatrix b(a.size());
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) {
      if (a(r, c) != 0) b.set(r, c);
    }
  }
  return b;
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix b(n);
  for (int i = 0; i < n; ++i) b.set(i, i);
  return b;
}

bool BoolMatrix::is_positive() const {
  const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (auto row : rows_) {
    if (row != full) return false;
  }
  return true;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
  BoolMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    std::uint64_t acc = 0;
    for (int k = 0; k < n_; ++k) {
      if (get(r, k)) acc |= rhs.rows_[k];
    }
    out.rows_[r] = acc;
  }
  return out;
}

IntMatrix matrix_a(const SignedPermutation& p) {
  const int n = p.size();
  IntMatrix m = IntMatrix::identity(n);
  m(n - 1, p.position_of(n) - 1) += 1;
  return m;
}

IntMatrix matrix_b(const SignedPermutation& p) {
  const int n = p.size();
  const int k = p.position_of(n);
  const int s = k + (1 + p.sign(k)) / 2;
  if (s > n) throw std::invalid_argument("M_b undefined for " + p.to_string() + ": s(p) = n + 1");
  IntMatrix m(n);
  for (int i = 1; i <= k; ++i) m(i - 1, i - 1) += 1;
  m(n - 1, s - 1) += 1;
  for (int i = k; i <= n - 1; ++i) m(i - 1, i) += 1;
  return m;
}

IntMatrix transition_matrix(const SignedPermutation& p, RauzyType t) {
  return t == RauzyType::a ? matrix_a(p) : matrix_b(p);
}

IntMatrix path_product(const RauzyPath& path, int i) {
  if (i < 1 || i > path.length()) {
    throw std::out_of_range("path_product index " + std::to_string(i) + " outside 1.." +
                            std::to_string(path.length()));
  }
  IntMatrix m = IntMatrix::identity(path.symbol_count());
  for (int step = 0; step < i; ++step) {
    m = m * transition_matrix(path.vertices()[step], path.types()[step]);
  }
  return m;
}

int wielandt_bound(int n) { return n * n - 2 * n + 2; }

PositivityWitness is_eventually_positive(const BoolMatrix& a) {
  BoolMatrix power = a;
  const int bound = wielandt_bound(a.size());
  for (int k = 1; k <= bound; ++k) {
    if (power.is_positive()) return {true, k};
    power = power * a;
  }
  return {false, std::nullopt};
}

PositivityWitness is_eventually_positive(const IntMatrix& a) {
  if (!a.is_nonnegative()) throw std::invalid_argument("eventual positivity requires a nonnegative matrix");
  return is_eventually_positive(BoolMatrix::pattern_of(a));
}

}  // namespace flipiet
