#include "flipiet/perron.hpp"

#include <cmath>

namespace flipiet {

namespace {

std::vector<Real> multiply(const std::vector<std::vector<Real>>& a, const std::vector<Real>& x) {
  std::vector<Real> y(x.size(), 0.0L);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += a[r][c] * x[c];
  }
  return y;
}

Real sum(const std::vector<Real>& v) {
  Real s = 0;
  for (Real x : v) s += x;
  return s;
}

}  // namespace

PerronPair perron_eigenpair(const IntMatrix& a, Real tolerance, int max_iterations) {
  if (!is_eventually_positive(a).eventually_positive) {
    throw NotPrimitiveError("Perron eigenpair requires an eventually positive matrix");
  }
  const int n = a.size();
  std::vector<std::vector<Real>> dense(n, std::vector<Real>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) dense[r][c] = a(r, c).convert_to<Real>();
  }

  std::vector<Real> x(n, 1.0L / n);
  for (int it = 1; it <= max_iterations; ++it) {
    std::vector<Real> y = multiply(dense, x);
    const Real norm = sum(y);
    Real change = 0;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      change = std::fmax(change, std::fabs(y[i] - x[i]));
    }
    x = std::move(y);
    if (change < tolerance) {
      PerronPair out;
      const std::vector<Real> ax = multiply(dense, x);
      out.sigma = sum(ax);  // since sum(x) = 1
      for (int i = 0; i < n; ++i) out.residual = std::fmax(out.residual, std::fabs(ax[i] - out.sigma * x[i]));
      out.lambda = std::move(x);
      out.iterations = it;
      return out;
    }
  }
  throw NoConvergenceError("power iteration did not converge within " + std::to_string(max_iterations) +
                           " iterations");
}

}  // namespace flipiet
