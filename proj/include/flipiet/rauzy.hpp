#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flipiet/exchange_map.hpp"
#include "flipiet/int_matrix.hpp"
#include "flipiet/numeric.hpp"
#include "flipiet/rauzy_path.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// A point (lambda, p) of Lambda_n x Sigma_n.
template <class Num>
struct RauzyState {
  std::vector<Num> lambda;
  SignedPermutation perm;

  RauzyState(std::vector<Num> l, SignedPermutation p) : lambda(std::move(l)), perm(std::move(p)) {
    if (static_cast<int>(lambda.size()) != perm.size()) {
      throw std::invalid_argument("state dimension does not match permutation size");
    }
    for (const auto& x : lambda) {
      if (!(x > 0)) throw std::invalid_argument("state lengths must be strictly positive");
    }
  }
  explicit RauzyState(const ExchangeMap<Num>& t) : RauzyState(t.lengths(), t.perm()) {}

  Num total() const {
    Num s(0);
    for (const auto& x : lambda) s += x;
    return s;
  }
  ExchangeMap<Num> to_map(Space space = Space::interval) const { return ExchangeMap<Num>(lambda, perm, space); }
};

template <class Num>
struct StepRecord {
  RauzyType type;
  IntMatrix matrix;  // lambda_before = matrix * lambda_after
  Num nu;            // the step induces on [0, nu]
  RauzyState<Num> state_after;
  Backend backend = NumTraits<Num>::backend;
};

// Raised when lambda_n = lambda_{pi^{-1}(n)}, i.e. outside the domain of the
// induction operator.
class RauzyBoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// One step of the Rauzy induction operator. New lengths come from direct
// subtraction (the inverse transition matrix) so the exact backend stays exact.
template <class Num>
StepRecord<Num> rauzy_step(const RauzyState<Num>& s) {
  const SignedPermutation& p = s.perm;
  const int n = p.size();
  const int k = p.position_of(n);
  const Num& last = s.lambda[n - 1];
  const Num& top = s.lambda[k - 1];
  if (k == n || NumTraits<Num>::same_length(last, top)) {
    throw RauzyBoundaryError("state is on the induction boundary: lambda_n = lambda_{pi^-1(n)} for " +
                             p.to_string());
  }
  const Num total = s.total();
  if (top < last) {
    std::vector<Num> next = s.lambda;
    next[n - 1] = last - top;
    return StepRecord<Num>{RauzyType::a, matrix_a(p), Num(total - top),
                           RauzyState<Num>(std::move(next), transition_a(p))};
  }
  std::vector<Num> next;
  next.reserve(n);
  for (int i = 1; i < k; ++i) next.push_back(s.lambda[i - 1]);
  if (p.sign(k) == 1) {
    next.push_back(top - last);
    next.push_back(last);
  } else {
    next.push_back(last);
    next.push_back(top - last);
  }
  for (int i = k + 1; i <= n - 1; ++i) next.push_back(s.lambda[i - 1]);
  return StepRecord<Num>{RauzyType::b, matrix_b(p), Num(total - last),
                         RauzyState<Num>(std::move(next), transition_b(p))};
}

// As rauzy_step, then rescales the new lengths to sum 1.
template <class Num>
StepRecord<Num> rauzy_projective_step(const RauzyState<Num>& s) {
  StepRecord<Num> rec = rauzy_step(s);
  const Num total = rec.state_after.total();
  for (auto& x : rec.state_after.lambda) x /= total;
  return rec;
}

class ReducibleVertexError : public std::runtime_error {
 public:
  ReducibleVertexError(int index, const SignedPermutation& p)
      : std::runtime_error("vertex " + std::to_string(index) + " " + p.to_string() + " is reducible"),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// Applies t_1, ..., t_N starting at an irreducible p0. Throws
// ReducibleVertexError naming the first reducible vertex.
RauzyPath follow_itinerary(const SignedPermutation& p0, const std::vector<RauzyType>& types);

enum class OrbitStop { completed, domain_boundary, reducible };

std::string_view to_string(OrbitStop s);

template <class Num>
struct RenormalizationOrbit {
  std::vector<StepRecord<Num>> steps;
  OrbitStop stop = OrbitStop::completed;

  std::vector<RauzyType> types() const {
    std::vector<RauzyType> t;
    for (const auto& s : steps) t.push_back(s.type);
    return t;
  }
};

// Iterates rauzy_step up to max_steps times, stopping early at the domain
// boundary or when a permutation becomes reducible. Completing K steps
// certifies lambda lies in the depth-K cone of its path.
template <class Num>
RenormalizationOrbit<Num> renormalization_orbit(const RauzyState<Num>& start, int max_steps) {
  RenormalizationOrbit<Num> out;
  if (!is_irreducible(start.perm)) {
    out.stop = OrbitStop::reducible;
    return out;
  }
  RauzyState<Num> s = start;
  for (int i = 0; i < max_steps; ++i) {
    try {
      out.steps.push_back(rauzy_step(s));
    } catch (const RauzyBoundaryError&) {
      out.stop = OrbitStop::domain_boundary;
      return out;
    }
    s = out.steps.back().state_after;
    if (!is_irreducible(s.perm)) {
      out.stop = OrbitStop::reducible;
      return out;
    }
  }
  return out;
}

}  // namespace flipiet
