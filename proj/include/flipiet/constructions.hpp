#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flipiet/circle.hpp"
#include "flipiet/exchange_map.hpp"
#include "flipiet/int_matrix.hpp"
#include "flipiet/numeric.hpp"
#include "flipiet/perron.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// ---- printed data ----

IntMatrix printed_m();         // product along gamma_1 (9 steps)
IntMatrix printed_m_gamma2();  // first 4 steps of gamma_2
IntMatrix printed_m_gamma3();  // first 4 steps of gamma_3
IntMatrix printed_b();
IntMatrix printed_c();

struct NamedPath {
  SignedPermutation start;
  std::vector<RauzyType> types;
};

NamedPath gamma1();        // (-3,+4,+1,-2), abab babab
NamedPath gamma2_prefix();  // (-3,-1,-4,-2), abba
NamedPath gamma3_prefix();  // (-4,+1,+3,+2), bbab
NamedPath gamma_b();       // 13 steps from (-3,-1,-5,-2,-4)
NamedPath gamma_c();       // 22 steps from (-2,-3,-4,-5,-1)
inline constexpr int kGammaBPrefix = 4;
inline constexpr int kGammaCPrefix = 9;

// ---- examples ----

struct Counts {
  int n = 0;
  int f = 0;
  bool operator==(const Counts&) const = default;
};

struct CetConversion {
  ExchangeMap<Real> cet;
  CircleStructure<Real> structure;
  Counts counts;
};

class UnsupportedConversionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Identifies 0 ~ |lambda| and counts genuine discontinuities and flipped arcs.
// Throws UnsupportedConversionError when the permutation matches more than one
// fake-discontinuity case.
CetConversion iet_to_cet(const ExchangeMap<Real>& t);

// (n', f') of the glued circle map, computed for any permutation.
Counts glued_counts(const ExchangeMap<Real>& t);

struct NamedExample {
  std::string name;
  ExchangeMap<Real> iet;
  std::optional<ExchangeMap<Real>> cet;
  Counts as_iet;
  Counts as_cet;  // from the glued map, filled even when `cet` is unset
  FakeClassification fake;
  std::optional<PerronPair> perron;
  NamedPath path;                 // generating path
  std::vector<std::string> notes;  // construction diagnostics
};

NamedExample build_t1();
NamedExample build_t2();
NamedExample build_t3();
NamedExample build_tb();
NamedExample build_tc();
// name in t1|t2|t3|tb|tc
NamedExample build_named(const std::string& name);

// ---- operators ----

// Input must be an interval map normalized to |lambda| = 1 (within 1e-12).
template <class Num>
ExchangeMap<Num> alpha(const ExchangeMap<Num>& t);
template <class Num>
ExchangeMap<Num> beta(const ExchangeMap<Num>& t);

// ---- tree ----

struct TreeEntry {
  ExchangeMap<Real> map;
  std::string origin;  // "seed:t3", "alpha(4,1)", ...
};

using NfTree = std::map<std::pair<int, int>, TreeEntry>;

// Seeds (4,1) = T_3, (4,2) = p^(2) state of T_1, (4,3) = q^(1) state of T_2,
// (4,4) = T_2, (5,5) = T_c; then alpha (n,f) -> (n+1,f), else beta
// (n,f) -> (n+2,f+2). Throws ConstructionError if a cell cannot be reached.
NfTree build_nf_tree(int n_max);

// Tree seeds on their own, keyed by (n, f).
NfTree tree_seeds();

// ---- template implementation ----

namespace detail {
template <class Num>
void require_normalized(const ExchangeMap<Num>& t) {
  if (t.space() != Space::interval) throw std::invalid_argument("operator needs an interval map");
  if constexpr (std::is_same_v<Num, Rational>) {
    if (t.total_length() != 1) throw std::invalid_argument("operator needs a map normalized to [0,1]");
  } else {
    if (std::fabs(t.total_length() - 1) > 1e-12L) throw std::invalid_argument("operator needs a map normalized to [0,1]");
  }
}
}  // namespace detail

template <class Num>
ExchangeMap<Num> alpha(const ExchangeMap<Num>& t) {
  detail::require_normalized(t);
  const int n = t.interval_count();
  std::vector<int> values;
  std::vector<Num> lengths;
  for (int i = 1; i <= n; ++i) {
    values.push_back(t.perm().sign(i) * (t.perm().symbol(i) + 1));
    lengths.push_back(t.lengths()[i - 1] / 2);
  }
  values.push_back(1);
  lengths.push_back(Num(1) / 2);
  return ExchangeMap<Num>(std::move(lengths), SignedPermutation(std::move(values)));
}

template <class Num>
ExchangeMap<Num> beta(const ExchangeMap<Num>& t) {
  detail::require_normalized(t);
  const int n = t.interval_count();
  std::vector<int> values;
  std::vector<Num> lengths;
  for (int i = 1; i <= n; ++i) {
    values.push_back(t.perm().sign(i) * (t.perm().symbol(i) + 1));
    lengths.push_back(t.lengths()[i - 1] / 3);
  }
  values.push_back(-(n + 2));
  values.push_back(-1);
  lengths.push_back(Num(1) / 3);
  lengths.push_back(Num(1) / 3);
  return ExchangeMap<Num>(std::move(lengths), SignedPermutation(std::move(values)));
}

}  // namespace flipiet
