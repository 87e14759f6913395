#include "flipiet/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "flipiet/constructions.hpp"
#include "flipiet/dynamics.hpp"
#include "flipiet/perron.hpp"
#include "flipiet/rauzy.hpp"
#include "flipiet/rauzy_graph.hpp"
#include "flipiet/sampling.hpp"

namespace flipiet {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skipped";
  }
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

Json VerificationReport::to_json(bool timing) const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"id", c.id},
           {"description", c.description},
           {"status", std::string(flipiet::to_string(c.status))},
           {"measured", c.measured},
           {"tolerance", c.tolerance},
           {"detail", c.detail},
           {"runtime_limit_s", c.runtime_limit_seconds}};
    if (timing) j["runtime_s"] = c.runtime_seconds;
    list.push_back(j);
  }
  return Json{{"suite", suite},
              {"seed", seed},
              {"backend", std::string(backend_name(backend))},
              {"samples", samples},
              {"status", passed() ? "pass" : "fail"},
              {"checks", list}};
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  if (suite == "matrices") return {1, 2, 3, 4, 12};
  if (suite == "constructions") return {5, 8, 9, 11};
  if (suite == "theorem31") return {6, 7};
  if (suite == "tree") return {10};
  throw std::invalid_argument("unknown suite '" + suite + "' (expected all|matrices|constructions|theorem31|tree)");
}

namespace {

std::string sci(Real x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << static_cast<double>(x);
  return os.str();
}

// Max |sigma * U(x / sigma) - T(x)| over `count` fixed points of (0, |T|),
// skipping points where either side is undefined.
struct MapComparison {
  Real max_error = 0;
  int compared = 0;
};

MapComparison compare_rescaled(const ExchangeMap<Real>& induced, Real scale, const ExchangeMap<Real>& t,
                               int count = 100) {
  MapComparison out;
  for (int j = 0; j < count; ++j) {
    const Real x = (j + 0.371L) / count * t.total_length();
    const auto expected = t.evaluate(x);
    const auto got = induced.evaluate(x / scale);
    if (!expected || !got) continue;
    out.max_error = std::max(out.max_error, std::fabs(*got * scale - *expected));
    ++out.compared;
  }
  return out;
}

template <class Num>
std::vector<Num> to_backend(const std::vector<Real>& v) {
  std::vector<Num> out;
  for (Real x : v) out.push_back(NumTraits<Num>::from_real(x));
  return out;
}

template <class Num>
std::vector<Real> to_real_vector(const std::vector<Num>& v) {
  std::vector<Real> out;
  for (const auto& x : v) out.push_back(NumTraits<Num>::to_real(x));
  return out;
}

// Nine steps from (lambda, p0); returns final state in Real.
template <class Num>
RauzyState<Real> run_steps(const std::vector<Real>& lambda, const SignedPermutation& p, int steps) {
  RauzyState<Num> s(to_backend<Num>(lambda), p);
  for (int i = 0; i < steps; ++i) s = rauzy_step(s).state_after;
  return RauzyState<Real>(to_real_vector(s.lambda), s.perm);
}

template <class Num>
RenormalizationOrbit<Num> orbit_in(const ExchangeMap<Real>& t, int steps) {
  return renormalization_orbit(RauzyState<Num>(to_backend<Num>(t.lengths()), t.perm()), steps);
}

std::pair<OrbitStop, int> renormalize(const ExchangeMap<Real>& t, int steps, Backend backend) {
  if (backend == Backend::exact) {
    const auto o = orbit_in<Rational>(t, steps);
    return {o.stop, static_cast<int>(o.steps.size())};
  }
  const auto o = orbit_in<Real>(t, steps);
  return {o.stop, static_cast<int>(o.steps.size())};
}

std::string counts_text(const Counts& c) { return "(" + std::to_string(c.n) + "," + std::to_string(c.f) + ")"; }

// Re-evaluates T^period on the certificate exactly.
bool certificate_sound(const ExchangeMap<Rational>& t, const PeriodicCertificate& c) {
  if (c.kind == CertificateKind::interval) {
    for (const Rational& x : {Rational((c.lo * 3 + c.hi) / 4), Rational((c.lo + c.hi) / 2)}) {
      const auto y = iterate(t, x, c.period);
      if (!y || *y != x) return false;
    }
    return c.orientation == 1;
  }
  const auto y = iterate(t, c.lo, c.period);
  if (!y || *y != c.lo) return false;
  // orientation: a nearby point moves to the other side
  const Rational eps = Rational(1, 1000000000);
  for (Rational h = eps; h > Rational(1, BigInt(1) << 200); h /= 1000) {
    const auto z = iterate(t, Rational(c.lo + h), c.period);
    if (z) return *z == c.lo - h && c.orientation == -1;
  }
  return false;
}

// ---- criteria ----

void c01(CheckRecord& r, const VerificationOptions&) {
  r.description = "path products reproduce M, M_gamma2^(4), M_gamma3^(4)";
  r.tolerance = "exact";
  const auto g1 = gamma1(), g2 = gamma2_prefix(), g3 = gamma3_prefix();
  const bool m = path_product(follow_itinerary(g1.start, g1.types), 9) == printed_m();
  const bool m2 = path_product(follow_itinerary(g2.start, g2.types), 4) == printed_m_gamma2();
  const bool m3 = path_product(follow_itinerary(g3.start, g3.types), 4) == printed_m_gamma3();
  r.measured = std::to_string(m + m2 + m3) + "/3 equal";
  r.detail = std::string("M ") + (m ? "ok" : "differs") + ", M_gamma2 " + (m2 ? "ok" : "differs") + ", M_gamma3 " +
             (m3 ? "ok" : "differs");
  r.status = m && m2 && m3 ? CheckStatus::pass : CheckStatus::fail;
}

void c02(CheckRecord& r, const VerificationOptions&) {
  r.description = "printed permutations along the quoted itineraries";
  r.tolerance = "exact";
  struct Case {
    const char* label;
    NamedPath path;
    int index;
    SignedPermutation expected;
  };
  const std::vector<Case> cases{
      {"p2", gamma1(), 2, SignedPermutation({3, -4, -2, 1})},
      {"q1", gamma2_prefix(), 1, SignedPermutation({-4, -1, 2, -3})},
      {"q4", gamma2_prefix(), 4, SignedPermutation({4, -3, 1, -2})},
      {"r4", gamma3_prefix(), 4, SignedPermutation({-3, -1, -4, -2})},
      {"pb4", gamma_b(), 4, SignedPermutation({4, -5, -1, -3, 2})},
      {"pc9", gamma_c(), 9, SignedPermutation({-4, 5, 1, -2, -3})},
  };
  int ok = 0;
  for (const auto& c : cases) {
    const auto path = follow_itinerary(c.path.start, c.path.types);
    const auto& got = path.vertices()[c.index];
    if (got == c.expected) {
      ++ok;
    } else {
      r.detail += std::string(c.label) + " = " + got.to_string() + "; ";
    }
  }
  r.measured = std::to_string(ok) + "/" + std::to_string(cases.size()) + " match";
  r.status = ok == static_cast<int>(cases.size()) ? CheckStatus::pass : CheckStatus::fail;
}

void c03(CheckRecord& r, const VerificationOptions&) {
  r.description = "gamma_1 closes with all vertices irreducible";
  r.tolerance = "exact";
  const auto g1 = gamma1();
  try {
    const auto path = follow_itinerary(g1.start, g1.types);
    const bool all_irreducible = std::all_of(path.vertices().begin(), path.vertices().end(),
                                             [](const auto& p) { return is_irreducible(p); });
    r.measured = "end " + path.end().to_string();
    r.status = path.is_cycle() && all_irreducible ? CheckStatus::pass : CheckStatus::fail;
  } catch (const ReducibleVertexError& e) {
    r.measured = e.what();
    r.status = CheckStatus::fail;
  }
}

void c04(CheckRecord& r, const VerificationOptions&) {
  r.description = "M, B, C eventually positive within the Wielandt bound";
  r.tolerance = "exponent <= n^2-2n+2";
  bool ok = true;
  for (const auto& [name, a] : {std::pair{"M", printed_m()}, std::pair{"B", printed_b()}, std::pair{"C", printed_c()}}) {
    const auto w = is_eventually_positive(a);
    const bool good = w.eventually_positive && w.exponent && *w.exponent <= wielandt_bound(a.size());
    ok = ok && good;
    r.measured += std::string(name) + ":" + (w.exponent ? std::to_string(*w.exponent) : "none") + " ";
  }
  r.detail = "bounds n=4: " + std::to_string(wielandt_bound(4)) + ", n=5: " + std::to_string(wielandt_bound(5));
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
}

void c05(CheckRecord& r, const VerificationOptions& o) {
  r.description = "T_1 is self-induced on [0, 1/sigma]";
  r.tolerance = "residual < 1e-12; lengths 1e-9; first return 1e-10";
  const NamedExample t1 = build_t1();
  const PerronPair& pf = *t1.perron;
  const RauzyState<Real> end = o.backend == Backend::exact ? run_steps<Rational>(pf.lambda, t1.path.start, 9)
                                                           : run_steps<Real>(pf.lambda, t1.path.start, 9);
  Real length_error = 0;
  for (int i = 0; i < 4; ++i) length_error = std::max(length_error, std::fabs(end.lambda[i] - pf.lambda[i] / pf.sigma));
  const ExchangeMap<Real> induced = first_return_map(t1.iet, 1 / pf.sigma);
  const MapComparison cmp = compare_rescaled(induced, pf.sigma, t1.iet);
  r.measured = "residual " + sci(pf.residual) + ", lengths " + sci(length_error) + ", first return " +
               sci(cmp.max_error) + " on " + std::to_string(cmp.compared) + " points";
  r.detail = "sigma " + to_decimal(pf.sigma) + ", final permutation " + end.perm.to_string();
  const bool ok = pf.residual < 1e-12L && end.perm == t1.path.start && length_error < 1e-9L &&
                  cmp.max_error < 1e-10L && cmp.compared == 100;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
}

void c06(CheckRecord& r, const VerificationOptions& o) {
  r.description = "random rational (3,1)-CETs have periodic points; flip-arc images disjoint before overlap";
  r.tolerance = "max_period 10^4, exact";
  const int n = o.samples;
  std::vector<char> certified(n, 0), disjoint(n, 0), bounded(n, 0), split(n, 0);
  std::vector<std::string> errors(n);
  parallel_for(n, o.threads, [&](std::size_t i) {
    try {
      const SampledCet s = sample_cet(3, 1, sample_seed(o.seed, i));
      const auto cert = find_periodic_point(s.map, 10000);
      certified[i] = cert && certificate_sound(s.map, *cert);
      const auto rep = interval_image_iteration(s.map);
      disjoint[i] = rep.pairwise_disjoint;
      bounded[i] = rep.first_overlap <= rep.bound;
      split[i] = rep.hit_index.has_value();
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  const auto count = [](const std::vector<char>& v) { return std::count(v.begin(), v.end(), 1); };
  r.measured = std::to_string(count(certified)) + "/" + std::to_string(n) + " certified, " +
               std::to_string(count(disjoint)) + " disjoint, " + std::to_string(count(bounded)) + " N <= ceil(1/|I_1|)";
  r.detail = std::to_string(count(split)) + " samples with a_2 in an earlier image (split point found)";
  for (int i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      r.detail += "; sample " + std::to_string(i) + ": " + errors[i];
      break;
    }
  }
  r.status = count(certified) == n && count(disjoint) == n && count(bounded) == n ? CheckStatus::pass
                                                                                  : CheckStatus::fail;
}

void c07(CheckRecord& r, const VerificationOptions& o) {
  r.description = "random rational 2-CETs with 1 or 2 flips have periodic points";
  r.tolerance = "exact";
  const int n = o.samples_2cet;
  std::vector<char> ok(2 * n, 0);
  parallel_for(2 * n, o.threads, [&](std::size_t i) {
    const int flips = i < static_cast<std::size_t>(n) ? 1 : 2;
    const SampledCet s = sample_cet(2, flips, sample_seed(o.seed ^ 0x2cedULL, i), flips == 1);
    const auto cert = find_periodic_point(s.map, 10000);
    ok[i] = cert && certificate_sound(s.map, *cert);
  });
  const long one = std::count(ok.begin(), ok.begin() + n, 1);
  const long two = std::count(ok.begin() + n, ok.end(), 1);
  r.measured = "1 flip " + std::to_string(one) + "/" + std::to_string(n) + ", 2 flips " + std::to_string(two) + "/" +
               std::to_string(n);
  r.status = one == n && two == n ? CheckStatus::pass : CheckStatus::fail;
}

void c08(CheckRecord& r, const VerificationOptions&) {
  r.description = "interval/circle flip accounting of the named examples";
  r.tolerance = "exact";
  struct Expect {
    const char* name;
    Counts iet;
    std::optional<Counts> cet;
    std::optional<FakeStatus> fake;
  };
  const std::vector<Expect> expect{
      {"t1", {4, 2}, Counts{3, 2}, std::nullopt},
      {"t2", {4, 4}, Counts{3, 3}, std::nullopt},
      {"t3", {4, 1}, Counts{4, 1}, FakeStatus::none},
      {"tb", {5, 5}, std::nullopt, FakeStatus::one},
      {"tc", {5, 5}, std::nullopt, FakeStatus::none},
  };
  bool all = true;
  for (const auto& e : expect) {
    const NamedExample ex = build_named(e.name);
    bool ok = ex.as_iet == e.iet;
    if (e.cet) ok = ok && ex.as_cet == *e.cet;
    if (e.fake) ok = ok && ex.fake.status == *e.fake;
    all = all && ok;
    r.measured += std::string(e.name) + " " + counts_text(ex.as_iet) + "->" + counts_text(ex.as_cet) + " fake " +
                  ex.fake.to_string() + (ok ? "" : " [mismatch]") + "; ";
  }
  r.status = all ? CheckStatus::pass : CheckStatus::fail;
}

void c09(CheckRecord& r, const VerificationOptions&) {
  r.description = "alpha and beta: flip arithmetic, no fake discontinuity, first-return recovery";
  r.tolerance = "1e-10 on 100 points";
  bool all = true;
  Real worst = 0;
  for (const char* name : {"t1", "t2", "t3"}) {
    const ExchangeMap<Real> t = build_named(name).iet;
    const int n = t.interval_count(), f = t.flip_count();
    const auto a = alpha(t);
    const auto b = beta(t);
    const auto ra = compare_rescaled(first_return_map(a, Real(1) / 2), Real(2), t);
    const auto rb = compare_rescaled(first_return_map(b, Real(1) / 3), Real(3), t);
    const bool ok = a.interval_count() == n + 1 && a.flip_count() == f && b.interval_count() == n + 2 &&
                    b.flip_count() == f + 2 && classify_fake_discontinuity(a.perm()).status == FakeStatus::none &&
                    classify_fake_discontinuity(b.perm()).status == FakeStatus::none && ra.max_error < 1e-10L &&
                    rb.max_error < 1e-10L && ra.compared == 100 && rb.compared == 100;
    worst = std::max({worst, ra.max_error, rb.max_error});
    all = all && ok;
    r.detail += std::string(name) + (ok ? " ok; " : " FAILED; ");
  }
  r.measured = "max recovery error " + sci(worst);
  r.status = all ? CheckStatus::pass : CheckStatus::fail;
}

void c10(CheckRecord& r, const VerificationOptions& o) {
  r.description = "(n,f) tree populated and every entry renormalizes for 50 steps";
  r.tolerance = "4 <= n <= n_max, 1 <= f <= n; 50 steps";
  const NfTree tree = build_nf_tree(o.n_max);
  int cells = 0, populated = 0, invariants = 0, renormalized = 0;
  std::string failures;
  for (int n = 4; n <= o.n_max; ++n) {
    for (int f = 1; f <= n; ++f) {
      ++cells;
      const auto it = tree.find({n, f});
      if (it == tree.end()) continue;
      ++populated;
      const auto& t = it->second.map;
      const bool fake_ok = (n == 4 && f == 4) || classify_fake_discontinuity(t.perm()).status == FakeStatus::none;
      if (t.interval_count() == n && t.flip_count() == f && fake_ok) ++invariants;
      const auto [stop, steps] = renormalize(t, 50, o.backend);
      if (stop == OrbitStop::completed) {
        ++renormalized;
      } else if (failures.size() < 400) {
        failures += "(" + std::to_string(n) + "," + std::to_string(f) + ") " + it->second.origin + ": " +
                    std::string(to_string(stop)) + " after " + std::to_string(steps) + "; ";
      }
    }
  }
  r.measured = std::to_string(populated) + "/" + std::to_string(cells) + " populated, " + std::to_string(invariants) +
               " invariants ok, " + std::to_string(renormalized) + " renormalize 50 steps";
  r.detail = failures;
  r.status = populated == cells && invariants == cells && renormalized == cells ? CheckStatus::pass
                                                                                : CheckStatus::fail;
}

void c11(CheckRecord& r, const VerificationOptions&) {
  r.description = "orbit gaps and visit frequencies of T_1, T_2, T_3";
  r.tolerance = "max gap < 1e-3; |freq(0.2,0.5) - 0.3| < 0.02";
  bool all = true;
  for (const char* name : {"t1", "t2", "t3"}) {
    const ExchangeMap<Real> t = build_named(name).iet;
    const auto rep = orbit(t, 0.1L, 100000);
    const double freq = visit_frequency(rep.points, 0.2L, 0.5L);
    const bool ok = rep.stopped_reason == OrbitStopReason::budget && rep.max_gap < 1e-3L && std::fabs(freq - 0.3) < 0.02;
    all = all && ok;
    r.measured += std::string(name) + " gap " + sci(rep.max_gap) + " freq " + sci(freq) + "; ";
  }
  r.status = all ? CheckStatus::pass : CheckStatus::fail;
}

void c12(CheckRecord& r, const VerificationOptions&) {
  r.description = "G_4 census, cycles through p^(0), rotation invariance of specialness";
  r.tolerance = "exact";
  const RauzyGraph g = RauzyGraph::build(4);
  const auto g1 = gamma1();
  const auto cycles = find_cycles_through(g, g1.start, 9);
  const bool has_gamma1 =
      std::any_of(cycles.begin(), cycles.end(), [&](const RauzyPath& c) { return c.types() == g1.types; });
  int invariant = 0;
  for (const auto& c : cycles) {
    const bool s = is_special_cycle(c);
    bool same = true;
    for (int k = 1; k < c.length(); ++k) same = same && is_special_cycle(c.rotated(k)) == s;
    invariant += same;
  }
  r.measured = std::to_string(g.vertices().size()) + " vertices, " + std::to_string(cycles.size()) +
               " cycles, gamma_1 " + (has_gamma1 ? "found" : "missing") + ", rotation-invariant " +
               std::to_string(invariant);
  r.status = g.vertices().size() == 208 && has_gamma1 && invariant == static_cast<int>(cycles.size())
                 ? CheckStatus::pass
                 : CheckStatus::fail;
}

struct Criterion {
  void (*run)(CheckRecord&, const VerificationOptions&);
  double limit;
};

const Criterion kCriteria[] = {{c01, 1}, {c02, 1},  {c03, 1},  {c04, 1},  {c05, 5},   {c06, 60},
                               {c07, 10}, {c08, 5}, {c09, 10}, {c10, 60}, {c11, 30}, {c12, 30}};

}  // namespace

CheckRecord run_criterion(int number, const VerificationOptions& options) {
  if (number < 1 || number > 12) throw std::invalid_argument("criterion number must be in 1..12");
  CheckRecord r;
  r.id = std::string("c") + (number < 10 ? "0" : "") + std::to_string(number);
  r.runtime_limit_seconds = kCriteria[number - 1].limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    kCriteria[number - 1].run(r, options);
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.detail += std::string("error: ") + e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (options.enforce_runtime && r.status == CheckStatus::pass && r.runtime_seconds > r.runtime_limit_seconds) {
    r.status = CheckStatus::fail;
    r.detail += " runtime limit exceeded";
  }
  return r;
}

VerificationReport run_verification(const VerificationOptions& options) {
  VerificationReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.backend = options.backend;
  report.samples = options.samples;
  for (int c : suite_criteria(options.suite)) report.checks.push_back(run_criterion(c, options));
  std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

}  // namespace flipiet
