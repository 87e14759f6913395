#pragma once

#include <stdexcept>
#include <vector>

#include "flipiet/int_matrix.hpp"
#include "flipiet/numeric.hpp"

namespace flipiet {

// Dominant eigenpair of a primitive nonnegative matrix. lambda is normalized
// to sum 1; residual is max_i |(A lambda)_i - sigma lambda_i|.
struct PerronPair {
  Real sigma = 0;
  std::vector<Real> lambda;
  Real residual = 0;
  int iterations = 0;
};

class NotPrimitiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Power iteration; stops once successive normalized iterates differ by less
// than `tolerance` in max-norm.
PerronPair perron_eigenpair(const IntMatrix& a, Real tolerance = kDefaultEigenTolerance,
                            int max_iterations = 1'000'000);

}  // namespace flipiet
