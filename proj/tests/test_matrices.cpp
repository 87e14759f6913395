#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "flipiet/constructions.hpp"
#include "flipiet/int_matrix.hpp"
#include "flipiet/perron.hpp"
#include "flipiet/rauzy.hpp"

using namespace flipiet;

namespace {

SignedPermutation P(std::vector<int> v) { return SignedPermutation(std::move(v)); }

IntMatrix unit(int n, int r, int c) {  // E + E_{r,c}, 1-based
  IntMatrix m = IntMatrix::identity(n);
  m(r - 1, c - 1) += 1;
  return m;
}

IntMatrix power(const IntMatrix& a, int k) {
  IntMatrix out = IntMatrix::identity(a.size());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

// Least k <= bound with A^k > 0 by exact integer powering.
std::optional<int> positivity_oracle(const IntMatrix& a, int bound) {
  IntMatrix p = a;
  for (int k = 1; k <= bound; ++k, p = p * a) {
    if (p.is_positive()) return k;
  }
  return std::nullopt;
}

// Characteristic polynomial by Faddeev-LeVerrier in exact arithmetic;
// coefficients c_0..c_n of det(xI - A), c_n = 1.
std::vector<Rational> char_poly(const IntMatrix& a) {
  const int n = a.size();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n)), M(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rational(a(i, j));
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  auto times_a = [&](const std::vector<std::vector<Rational>>& X) {
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) out[i][j] += A[i][l] * X[l][j];
    return out;
  };
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  for (int k = 1; k <= n; ++k) {
    M = times_a(M);
    for (int i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    const auto AM = times_a(M);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = -tr / k;
  }
  return c;
}

// Largest real root by bisection on [0, max row sum].
long double dominant_root(const IntMatrix& a) {
  const auto c = char_poly(a);
  auto f = [&](long double x) {
    long double v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[i].convert_to<long double>();
    return v;
  };
  long double hi = 0;
  for (int i = 0; i < a.size(); ++i) {
    long double row = 0;
    for (int j = 0; j < a.size(); ++j) row += a(i, j).convert_to<long double>();
    hi = std::max(hi, row);
  }
  hi += 1;
  // step down from the bound to bracket the largest sign change
  const long double step = hi / 4096;
  long double lo = hi;
  while (lo > 0 && (f(lo) > 0) == (f(hi) > 0)) lo -= step;
  long double l = lo, h = lo + step;
  for (int it = 0; it < 200; ++it) {
    const long double m = (l + h) / 2;
    ((f(m) > 0) == (f(h) > 0) ? h : l) = m;
  }
  return (l + h) / 2;
}

Eigen::MatrixXd to_eigen(const IntMatrix& a) {
  Eigen::MatrixXd m(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) m(i, j) = a(i, j).convert_to<double>();
  return m;
}

}  // namespace

TEST_CASE("M_a examples") {
  CHECK(matrix_a(P({-3, 4, 1, -2})) == unit(4, 4, 2));
  CHECK(matrix_a(P({-3, -1, -4, -2})) == unit(4, 4, 3));
  CHECK(matrix_a(P({1, 2, 3, 4}))(3, 3) == 2);
}

TEST_CASE("M_b examples") {
  CHECK(matrix_b(P({-4, -2, 1, -3})) == IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
  CHECK(matrix_b(P({3, 4, 1, 2})) == IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(matrix_b(P({2, 1, 3})), std::invalid_argument);
}

TEST_CASE("transition matrices are unimodular, not always in SL_n") {
  for (int n : {4, 5}) {
    for (const auto& p : all_signed_permutations(n)) {
      // pi(n) = n puts a 2 on the diagonal of M_a; such p are reducible
      if (p.symbol(n) == n) continue;
      CHECK(abs(matrix_a(p).determinant()) == 1);
      CHECK(abs(matrix_b(p).determinant()) == 1);
    }
  }
  CHECK(matrix_b(P({-4, -2, 1, -3})).determinant() == -1);
}

TEST_CASE("lambda_before = M * lambda_after, exactly, for every step") {
  for (int n : {4, 5}) {
    int checked = 0;
    for (const auto& p : all_signed_permutations(n)) {
      if (!is_irreducible(p)) continue;
      // a generic rational length vector on each side of lambda_n vs lambda_k
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<Rational> lambda;
        for (int i = 1; i <= n; ++i) lambda.emplace_back(Rational(i * 7 + 3, 11 + i));
        const int k = p.position_of(n);
        if (k == n) continue;
        lambda[n - 1] = variant == 0 ? lambda[k - 1] * Rational(3, 2) : lambda[k - 1] * Rational(2, 3);
        const RauzyState<Rational> s(lambda, p);
        const auto rec = rauzy_step(s);
        CHECK(rec.type == (variant == 0 ? RauzyType::a : RauzyType::b));
        CHECK(rec.matrix.apply(rec.state_after.lambda) == lambda);
        CHECK(rec.matrix == transition_matrix(p, rec.type));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("path products match the printed matrices and the recursion") {
  const NamedPath g1 = gamma1();
  const RauzyPath p1 = follow_itinerary(g1.start, g1.types);
  CHECK(path_product(p1, 9) == printed_m());
  CHECK(printed_m() == IntMatrix{{2, 2, 3, 2}, {0, 1, 1, 1}, {1, 1, 2, 1}, {1, 2, 3, 3}});
  const NamedPath g2 = gamma2_prefix();
  CHECK(path_product(follow_itinerary(g2.start, g2.types), 4) == printed_m_gamma2());
  const NamedPath g3 = gamma3_prefix();
  CHECK(path_product(follow_itinerary(g3.start, g3.types), 4) == printed_m_gamma3());
  for (int i = 2; i <= 9; ++i) {
    CHECK(path_product(p1, i) ==
          path_product(p1, i - 1) * transition_matrix(p1.vertices()[i - 1], p1.types()[i - 1]));
  }
  CHECK(path_product(p1, 1) == transition_matrix(p1.start(), p1.types()[0]));
  CHECK_THROWS_AS(path_product(p1, 0), std::out_of_range);
  CHECK_THROWS_AS(path_product(p1, 10), std::out_of_range);
}

TEST_CASE("eventual positivity") {
  CHECK(wielandt_bound(4) == 10);
  CHECK(wielandt_bound(5) == 17);
  const auto id = is_eventually_positive(IntMatrix::identity(3));
  CHECK_FALSE(id.eventually_positive);
  CHECK_FALSE(id.exponent.has_value());
  // only zero of M is at (2,1)
  CHECK(printed_m()(1, 0) == 0);
  for (const IntMatrix& m : {printed_m(), printed_b(), printed_c()}) {
    const auto w = is_eventually_positive(m);
    const auto oracle = positivity_oracle(m, wielandt_bound(m.size()));
    REQUIRE(oracle.has_value());
    CHECK(w.eventually_positive);
    CHECK(w.exponent == oracle);
  }
  CHECK(is_eventually_positive(printed_m()).exponent == 2);
  // a permutation matrix is never eventually positive
  const IntMatrix cyc{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK_FALSE(is_eventually_positive(cyc).eventually_positive);
  CHECK_FALSE(positivity_oracle(cyc, 20).has_value());
  CHECK_THROWS_AS(is_eventually_positive(IntMatrix{{1, -1}, {1, 1}}), std::invalid_argument);
  // primitive with exponent above 1
  const IntMatrix w3{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  CHECK(is_eventually_positive(w3).exponent == positivity_oracle(w3, 10));
  CHECK(is_eventually_positive(w3).exponent == wielandt_bound(3));
  CHECK(power(w3, 5).is_positive());
}

TEST_CASE("Perron eigenpair: trivial cases") {
  const auto one = perron_eigenpair(IntMatrix{{2}});
  CHECK(std::fabs(one.sigma - 2) < 1e-14L);
  CHECK(one.lambda == std::vector<Real>{1});
  const auto two = perron_eigenpair(IntMatrix{{1, 1}, {1, 1}});
  CHECK(std::fabs(two.sigma - 2) < 1e-14L);
  CHECK(std::fabs(two.lambda[0] - 0.5L) < 1e-14L);
  CHECK_THROWS_AS(perron_eigenpair(IntMatrix::identity(2)), NotPrimitiveError);
}

TEST_CASE("Perron eigenpair agrees with independent oracles") {
  for (const IntMatrix& m : {printed_m(), printed_b(), printed_c(), printed_m() * printed_m()}) {
    const PerronPair pf = perron_eigenpair(m);
    CHECK(pf.residual < 1e-12L);
    Real sum = 0;
    for (Real x : pf.lambda) {
      CHECK(x > 0);
      sum += x;
    }
    CHECK(std::fabs(sum - 1) < 1e-15L);
    // sigma against the characteristic polynomial root
    const long double root = dominant_root(m);
    CHECK(std::fabs(pf.sigma - root) < 1e-10L * root);
    // residual recomputed independently
    const auto av = m.apply(pf.lambda);
    for (std::size_t i = 0; i < av.size(); ++i) CHECK(std::fabs(av[i] - pf.sigma * pf.lambda[i]) < 1e-12L);
    // sigma strictly dominates every other eigenvalue
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m));
    std::vector<double> moduli;
    for (int i = 0; i < es.eigenvalues().size(); ++i) moduli.push_back(std::abs(es.eigenvalues()[i]));
    std::sort(moduli.rbegin(), moduli.rend());
    CHECK(std::fabs(moduli[0] - static_cast<double>(pf.sigma)) < 1e-9 * moduli[0]);
    CHECK(moduli[1] < moduli[0] - 1e-6);
    // renormalization contracts
    CHECK(pf.sigma > 1);
  }
}
