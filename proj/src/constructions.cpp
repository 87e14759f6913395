#include "flipiet/constructions.hpp"

#include <algorithm>

#include "flipiet/rauzy.hpp"

namespace flipiet {

IntMatrix printed_m() { return IntMatrix{{2, 2, 3, 2}, {0, 1, 1, 1}, {1, 1, 2, 1}, {1, 2, 3, 3}}; }
IntMatrix printed_m_gamma2() { return IntMatrix{{1, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}}; }
IntMatrix printed_m_gamma3() { return IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 0}}; }
IntMatrix printed_b() {
  return IntMatrix{{1, 1, 0, 0, 0}, {1, 0, 3, 4, 3}, {1, 1, 1, 1, 1}, {0, 0, 1, 2, 2}, {0, 0, 1, 1, 0}};
}
IntMatrix printed_c() {
  return IntMatrix{{2, 2, 3, 4, 3}, {0, 1, 1, 1, 1}, {1, 1, 2, 1, 1}, {0, 0, 0, 2, 1}, {1, 2, 3, 3, 3}};
}

NamedPath gamma1() { return {SignedPermutation({-3, 4, 1, -2}), parse_types("ababbabab")}; }
NamedPath gamma2_prefix() { return {SignedPermutation({-3, -1, -4, -2}), parse_types("abba")}; }
NamedPath gamma3_prefix() { return {SignedPermutation({-4, 1, 3, 2}), parse_types("bbab")}; }
NamedPath gamma_b() { return {SignedPermutation({-3, -1, -5, -2, -4}), parse_types("baabbbabababa")}; }
NamedPath gamma_c() { return {SignedPermutation({-2, -3, -4, -5, -1}), parse_types("aabbabbaaabbabbababaab")}; }

namespace {

std::vector<Real> normalized(std::vector<Real> v) {
  Real s = 0;
  for (Real x : v) s += x;
  for (Real& x : v) x /= s;
  return v;
}

void require_positive(const std::vector<Real>& v, const std::string& what) {
  for (Real x : v) {
    if (!(x > 0)) throw ConstructionError(what + " has a non-positive entry");
  }
}

void fill_metadata(NamedExample& ex) {
  ex.as_iet = {ex.iet.interval_count(), ex.iet.flip_count()};
  ex.fake = classify_fake_discontinuity(ex.iet.perm());
  ex.as_cet = glued_counts(ex.iet);
  try {
    ex.cet = iet_to_cet(ex.iet).cet;
  } catch (const UnsupportedConversionError& e) {
    ex.notes.push_back(std::string("cet conversion: ") + e.what());
  }
}

std::vector<Real> steps_from(const std::vector<Real>& lambda, const SignedPermutation& p,
                             const std::vector<RauzyType>& expected) {
  RauzyState<Real> s(lambda, p);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    auto rec = rauzy_step(s);
    if (rec.type != expected[i]) {
      throw ConstructionError("renormalization left the expected itinerary at step " + std::to_string(i));
    }
    s = rec.state_after;
  }
  return s.lambda;
}

Real max_abs_diff(const std::vector<Real>& x, const std::vector<Real>& y) {
  Real d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::fabs(x[i] - y[i]));
  return d;
}

NamedExample build_five(const std::string& name, const NamedPath& full, int prefix, const IntMatrix& cycle_matrix,
                        const SignedPermutation& expected_end) {
  NamedExample ex{name, ExchangeMap<Real>({1}, SignedPermutation({1})), std::nullopt, {}, {}, {}, {}, full, {}};
  const PerronPair pf = perron_eigenpair(cycle_matrix);
  std::vector<RauzyType> head(full.types.begin(), full.types.begin() + prefix);
  const RauzyPath head_path = follow_itinerary(full.start, head);
  if (head_path.end() != expected_end) {
    throw ConstructionError(name + ": prefix ends at " + head_path.end().to_string() + ", expected " +
                            expected_end.to_string());
  }
  std::vector<Real> mu = path_product(head_path, prefix).apply(pf.lambda);
  require_positive(mu, name + " length vector");
  ex.iet = ExchangeMap<Real>(normalized(mu), full.start);
  ex.perron = pf;

  // Best-effort: the remainder of the itinerary should close a cycle at the
  // prefix endpoint whose product is the printed matrix.
  std::vector<RauzyType> tail(full.types.begin() + prefix, full.types.end());
  try {
    const RauzyPath cycle = follow_itinerary(expected_end, tail);
    const bool closes = cycle.is_cycle();
    const bool same = closes && path_product(cycle, cycle.length()) == cycle_matrix;
    ex.notes.push_back("cycle search: itinerary tail " + to_string(tail) + (closes ? " closes" : " does not close") +
                       (same ? ", product equals the printed matrix" : ", product differs from the printed matrix"));
  } catch (const std::exception& e) {
    ex.notes.push_back(std::string("cycle search failed: ") + e.what());
  }
  fill_metadata(ex);
  return ex;
}

}  // namespace

Counts glued_counts(const ExchangeMap<Real>& t) {
  const auto c = glue(t.with_space(Space::circle));
  return {c.arc_count(), c.flip_count()};
}

CetConversion iet_to_cet(const ExchangeMap<Real>& t) {
  const FakeClassification fc = classify_fake_discontinuity(t.perm());
  if (fc.status == FakeStatus::multiple) {
    throw UnsupportedConversionError(t.perm().to_string() + " has more than one fake discontinuity (" +
                                     fc.to_string() + ")");
  }
  ExchangeMap<Real> cet = t.with_space(Space::circle);
  CircleStructure<Real> s = glue(cet);
  Counts counts{s.arc_count(), s.flip_count()};
  return {std::move(cet), std::move(s), counts};
}

NamedExample build_t1() {
  const NamedPath path = gamma1();
  const PerronPair pf = perron_eigenpair(printed_m());
  NamedExample ex{"t1", ExchangeMap<Real>(pf.lambda, path.start), std::nullopt, {}, {}, {}, pf, path, {}};
  fill_metadata(ex);
  return ex;
}

NamedExample build_t2() {
  const NamedExample t1 = build_t1();
  const auto g1 = gamma1();
  std::vector<RauzyType> first5(g1.types.begin(), g1.types.begin() + 5);
  // lambda^(5) = (M^(5))^{-1} lambda, by five induction steps.
  const std::vector<Real> lambda5 = steps_from(t1.iet.lengths(), g1.start, first5);
  const std::vector<Real> back = path_product(RauzyPath::from_itinerary(g1.start, first5), 5).apply(lambda5);
  std::vector<Real> mu = printed_m_gamma2().apply(lambda5);
  require_positive(mu, "mu");
  const NamedPath path = gamma2_prefix();
  NamedExample ex{"t2", ExchangeMap<Real>(normalized(mu), path.start), std::nullopt, {}, {}, {}, std::nullopt, path,
                  {}};
  ex.notes.push_back("M^(5) lambda^(5) reproduces lambda to " + to_decimal(max_abs_diff(back, t1.iet.lengths())));
  fill_metadata(ex);
  return ex;
}

NamedExample build_t3() {
  const NamedExample t2 = build_t2();
  std::vector<Real> xi = printed_m_gamma3().apply(t2.iet.lengths());
  require_positive(xi, "xi");
  const NamedPath path = gamma3_prefix();
  NamedExample ex{"t3", ExchangeMap<Real>(normalized(xi), path.start), std::nullopt, {}, {}, {}, std::nullopt, path,
                  {}};
  fill_metadata(ex);
  return ex;
}

NamedExample build_tb() {
  return build_five("tb", gamma_b(), kGammaBPrefix, printed_b(), SignedPermutation({4, -5, -1, -3, 2}));
}

NamedExample build_tc() {
  return build_five("tc", gamma_c(), kGammaCPrefix, printed_c(), SignedPermutation({-4, 5, 1, -2, -3}));
}

NamedExample build_named(const std::string& name) {
  if (name == "t1") return build_t1();
  if (name == "t2") return build_t2();
  if (name == "t3") return build_t3();
  if (name == "tb") return build_tb();
  if (name == "tc") return build_tc();
  throw std::invalid_argument("unknown example '" + name + "' (expected t1|t2|t3|tb|tc)");
}

namespace {

ExchangeMap<Real> state_after(const ExchangeMap<Real>& t, int steps, const SignedPermutation& expected) {
  RauzyState<Real> s(t);
  for (int i = 0; i < steps; ++i) s = rauzy_step(s).state_after;
  if (s.perm != expected) {
    throw ConstructionError("seed state has permutation " + s.perm.to_string() + ", expected " + expected.to_string());
  }
  return ExchangeMap<Real>(normalized(s.lambda), s.perm);
}

}  // namespace

NfTree tree_seeds() {
  const NamedExample t1 = build_t1();
  const NamedExample t2 = build_t2();
  NfTree seeds;
  seeds.emplace(std::pair{4, 1}, TreeEntry{build_t3().iet, "seed:t3"});
  seeds.emplace(std::pair{4, 2}, TreeEntry{state_after(t1.iet, 2, SignedPermutation({3, -4, -2, 1})), "seed:p2"});
  seeds.emplace(std::pair{4, 3}, TreeEntry{state_after(t2.iet, 1, SignedPermutation({-4, -1, 2, -3})), "seed:q1"});
  seeds.emplace(std::pair{4, 4}, TreeEntry{t2.iet, "seed:t2"});
  seeds.emplace(std::pair{5, 5}, TreeEntry{build_tc().iet, "seed:tc"});
  return seeds;
}

NfTree build_nf_tree(int n_max) {
  if (n_max < 4) throw std::invalid_argument("build_nf_tree needs n_max >= 4");
  NfTree tree = tree_seeds();
  for (auto it = tree.begin(); it != tree.end();) {
    it = it->first.first > n_max ? tree.erase(it) : std::next(it);
  }
  for (int n = 5; n <= n_max; ++n) {
    for (int f = 1; f <= n; ++f) {
      if (tree.count({n, f})) continue;
      if (auto src = tree.find({n - 1, f}); src != tree.end()) {
        tree.emplace(std::pair{n, f}, TreeEntry{alpha(src->second.map),
                                                "alpha(" + std::to_string(n - 1) + "," + std::to_string(f) + ")"});
      } else if (auto src2 = tree.find({n - 2, f - 2}); src2 != tree.end()) {
        tree.emplace(std::pair{n, f}, TreeEntry{beta(src2->second.map), "beta(" + std::to_string(n - 2) + "," +
                                                                            std::to_string(f - 2) + ")"});
      } else {
        throw ConstructionError("(" + std::to_string(n) + "," + std::to_string(f) + ") is unreachable");
      }
    }
  }
  return tree;
}

}  // namespace flipiet
