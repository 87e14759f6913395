#include "doctest.h"

#include <cmath>
#include <random>

#include "flipiet/constructions.hpp"
#include "flipiet/dynamics.hpp"
#include "flipiet/rauzy.hpp"

using namespace flipiet;

namespace {

SignedPermutation P(std::vector<int> v) { return SignedPermutation(std::move(v)); }

std::vector<RauzyType> repeat(const std::string& word, int times) {
  std::string s;
  for (int i = 0; i < times; ++i) s += word;
  return parse_types(s);
}

// Naive first return: apply T until the orbit lands in (0, nu).
std::optional<Rational> naive_return(const ExchangeMap<Rational>& t, const Rational& nu, Rational x) {
  for (int step = 0; step < 10000; ++step) {
    auto y = t.evaluate(x);
    if (!y) return std::nullopt;
    x = *y;
    if (x > 0 && x < nu) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("single step example") {
  const RauzyState<Rational> s({Rational(3, 10), Rational(2, 10), Rational(1, 10), Rational(4, 10)},
                               P({-3, 4, 1, -2}));
  const auto rec = rauzy_step(s);
  CHECK(rec.type == RauzyType::a);
  CHECK(rec.state_after.perm == P({-4, -2, 1, -3}));
  CHECK(rec.state_after.lambda ==
        std::vector<Rational>{Rational(3, 10), Rational(2, 10), Rational(1, 10), Rational(2, 10)});
  CHECK(rec.nu == Rational(8, 10));
  CHECK(rec.backend == Backend::exact);

  const auto proj = rauzy_projective_step(s);
  CHECK(proj.state_after.lambda ==
        std::vector<Rational>{Rational(3, 8), Rational(2, 8), Rational(1, 8), Rational(2, 8)});

  const RauzyState<Real> f({0.3L, 0.2L, 0.1L, 0.4L}, P({-3, 4, 1, -2}));
  const auto frec = rauzy_projective_step(f);
  CHECK(frec.backend == Backend::floating);
  const std::vector<Real> expect{0.375L, 0.25L, 0.125L, 0.25L};
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(frec.state_after.lambda[i] - expect[i]) < 1e-15L);
}

TEST_CASE("domain boundary") {
  const RauzyState<Rational> s({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}, P({-3, 4, 1, -2}));
  CHECK_THROWS_AS(rauzy_step(s), RauzyBoundaryError);
  CHECK_THROWS_AS(rauzy_projective_step(s), RauzyBoundaryError);
  const auto orbit = renormalization_orbit(s, 10);
  CHECK(orbit.steps.empty());
  CHECK(orbit.stop == OrbitStop::domain_boundary);
  // float: relative 1e-12 counts as equal
  const RauzyState<Real> f({0.3L, 0.2L, 0.3L, 0.2L * (1 + 1e-14L)}, P({-3, 4, 1, -2}));
  CHECK_THROWS_AS(rauzy_step(f), RauzyBoundaryError);
  // pi(n) = n is never in the domain
  CHECK_THROWS_AS(rauzy_step(RauzyState<Rational>({Rational(1), Rational(2)}, P({1, 2}))), RauzyBoundaryError);
  CHECK_THROWS_AS(RauzyState<Rational>({Rational(1), Rational(0)}, P({2, 1})), std::invalid_argument);
}

TEST_CASE("follow_itinerary examples") {
  const auto g1 = follow_itinerary(P({-3, 4, 1, -2}), parse_types("ababbabab"));
  CHECK(g1.is_cycle());
  CHECK(g1.length() == 9);
  CHECK(follow_itinerary(P({-4, 1, 3, 2}), parse_types("bbab")).end() == P({-3, -1, -4, -2}));
  const auto q = follow_itinerary(P({-3, -1, -4, -2}), parse_types("abba"));
  CHECK(q.end() == P({4, -3, 1, -2}));
  CHECK_FALSE(q.is_cycle());
  try {
    follow_itinerary(P({-3, -2, 1}), parse_types("ba"));
    FAIL("expected a reducible vertex");
  } catch (const ReducibleVertexError& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(follow_itinerary(P({1, 2, 3}), parse_types("a")), ReducibleVertexError);
}

TEST_CASE("PF state of gamma_1 is periodic") {
  const PerronPair pf = perron_eigenpair(printed_m());
  RauzyState<Real> s(pf.lambda, P({-3, 4, 1, -2}));
  RauzyState<Real> raw = s;
  for (int i = 0; i < 9; ++i) {
    s = rauzy_projective_step(s).state_after;
    raw = rauzy_step(raw).state_after;
  }
  CHECK(s.perm == P({-3, 4, 1, -2}));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::fabs(s.lambda[i] - pf.lambda[i]) < 1e-9L);
    CHECK(std::fabs(raw.lambda[i] - pf.lambda[i] / pf.sigma) < 1e-12L);
  }
}

TEST_CASE("renormalization orbits of constructed examples") {
  const auto t1 = build_t1();
  const auto o1 = renormalization_orbit(RauzyState<Real>(t1.iet), 90);
  CHECK(o1.stop == OrbitStop::completed);
  CHECK(o1.types() == repeat("ababbabab", 10));

  const auto t3 = build_t3();
  // gamma_3, then gamma_2, whose last four steps ("abab") end at the base of
  // gamma_1, then gamma_1 forever
  const auto o3 = renormalization_orbit(RauzyState<Real>(t3.iet), 12 + 27);
  CHECK(o3.stop == OrbitStop::completed);
  CHECK(o3.types() == parse_types("bbab" "abba" "abab" "ababbabab" "ababbabab" "ababbabab"));
  CHECK(o3.steps[11].state_after.perm == P({-3, 4, 1, -2}));

  CHECK(renormalization_orbit(RauzyState<Real>({0.5L, 0.5L}, P({1, 2})), 5).stop == OrbitStop::reducible);
}

TEST_CASE("step invariants on random exact states") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 997);
  for (int n : {3, 4, 5}) {
    for (const auto& p : all_signed_permutations(n)) {
      if (!is_irreducible(p)) continue;
      std::vector<Rational> lambda;
      for (int i = 0; i < n; ++i) lambda.emplace_back(len(rng), 1000);
      const RauzyState<Rational> s(lambda, p);
      StepRecord<Rational> rec = [&] {
        try {
          return rauzy_step(s);
        } catch (const RauzyBoundaryError&) {
          lambda[n - 1] += Rational(1, 3);
          return rauzy_step(RauzyState<Rational>(lambda, p));
        }
      }();
      const int k = p.position_of(n);
      CHECK((rec.type == RauzyType::a) == (lambda[k - 1] < lambda[n - 1]));
      CHECK(rec.nu > 0);
      CHECK(rec.nu < s.total() + (lambda[n - 1] - s.lambda[n - 1]));
      CHECK(rec.matrix.apply(rec.state_after.lambda) == lambda);
    }
  }
}

TEST_CASE("the induced state is the first-return map on [0, nu]") {
  // Oracle: iterate the original map point by point until it re-enters
  // (0, nu), exact arithmetic.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 997);
  int compared = 0;
  for (int n : {3, 4, 5}) {
    for (const auto& p : all_signed_permutations(n)) {
      if (!is_irreducible(p)) continue;
      std::vector<Rational> lambda;
      for (int i = 0; i < n; ++i) lambda.emplace_back(len(rng), 1000);
      if (p.position_of(n) == n || lambda[n - 1] == lambda[p.position_of(n) - 1]) continue;
      const ExchangeMap<Rational> t(lambda, p);
      const auto rec = rauzy_step(RauzyState<Rational>(t));
      const ExchangeMap<Rational> induced = rec.state_after.to_map();
      CHECK(induced.total_length() == rec.nu);
      // the library's geometric first-return map agrees too
      const ExchangeMap<Rational> geometric = first_return_map(t, rec.nu);
      for (int j = 1; j <= 100; ++j) {
        const Rational x = rec.nu * Rational(2 * j - 1, 200) + Rational(1, 7919);
        if (!(x < rec.nu)) continue;
        const auto want = naive_return(t, rec.nu, x);
        const auto got = induced.evaluate(x);
        if (!want || !got) continue;
        CHECK(*got == *want);
        if (auto g = geometric.evaluate(x)) CHECK(*g == *want);
        ++compared;
      }
    }
  }
  CHECK(compared > 10000);
}

TEST_CASE("float steps satisfy the length relation to 1e-12") {
  const auto t2 = build_t2();
  const auto o = renormalization_orbit(RauzyState<Real>(t2.iet), 40);
  CHECK(o.steps.size() == 40);
  std::vector<Real> before = t2.iet.lengths();
  for (const auto& rec : o.steps) {
    const auto back = rec.matrix.apply(rec.state_after.lambda);
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(std::fabs(back[i] - before[i]) <= 1e-12L * before[i]);
    before = rec.state_after.lambda;
  }
}
