#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "flipiet/circle.hpp"
#include "flipiet/exchange_map.hpp"
#include "flipiet/numeric.hpp"

namespace flipiet {

// x -> slope * x + offset on (lo, hi).
template <class Num>
struct AffinePiece {
  Num lo;
  Num hi;
  int slope = 1;
  Num offset;

  Num image_lo() const { return slope == 1 ? Num(lo + offset) : Num(offset - hi); }
  Num image_hi() const { return slope == 1 ? Num(hi + offset) : Num(offset - lo); }
  Num length() const { return hi - lo; }
};

class ReturnBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Splits the piece wherever its image crosses one of `cuts`, then pushes
// each resulting piece to `out`. Slivers shorter than `slack` are dropped
// (float backend only; slack is 0 for exact arithmetic).
template <class Num>
void split_by_image(const AffinePiece<Num>& piece, const std::vector<Num>& cuts, const Num& slack,
                    std::vector<AffinePiece<Num>>& out) {
  const Num ilo = piece.image_lo();
  const Num ihi = piece.image_hi();
  std::vector<Num> inside;
  for (const Num& c : cuts) {
    if (c > ilo + slack && c < ihi - slack) inside.push_back(c);
  }
  if (inside.empty()) {
    out.push_back(piece);
    return;
  }
  // Preimages of the cuts, ordered along the domain.
  std::vector<Num> pre;
  pre.reserve(inside.size());
  for (const Num& c : inside) pre.push_back(piece.slope == 1 ? Num(c - piece.offset) : Num(piece.offset - c));
  std::sort(pre.begin(), pre.end());
  Num lo = piece.lo;
  for (const Num& x : pre) {
    out.push_back({lo, x, piece.slope, piece.offset});
    lo = x;
  }
  out.push_back({lo, piece.hi, piece.slope, piece.offset});
}

// Composes T after the piece; the piece must map into a single interval of T.
template <class Num>
AffinePiece<Num> push_forward(const ExchangeMap<Num>& t, const AffinePiece<Num>& piece) {
  const Num mid = (piece.image_lo() + piece.image_hi()) / 2;
  const auto& a = t.domain_breakpoints();
  auto it = std::upper_bound(a.begin(), a.end(), mid);
  int i = static_cast<int>(it - a.begin());
  i = std::clamp(i, 1, t.interval_count());
  // T(y) = s y + c with y = e x + d  =>  s e x + (s d + c)
  const int s = t.slope(i);
  return {piece.lo, piece.hi, s * piece.slope, Num(s * piece.offset + t.offset(i))};
}

}  // namespace detail

// The induced map on [0, nu]. Each sub-interval is pushed forward through
// continuity intervals of T until it lands back in (0, nu). Adjacent pieces
// that continue each other (same slope and offset) are merged. Circle maps
// are treated through their interval representation.
template <class Num>
ExchangeMap<Num> first_return_map(const ExchangeMap<Num>& t, const Num& nu, int budget = 100000) {
  if (!(nu > 0) || nu > t.total_length()) throw std::invalid_argument("first_return_map requires 0 < nu <= |lambda|");
  const Num slack = NumTraits<Num>::split_slack(t.total_length());
  std::vector<Num> cuts(t.domain_breakpoints().begin() + 1, t.domain_breakpoints().end() - 1);
  cuts.push_back(nu);
  std::sort(cuts.begin(), cuts.end());

  std::vector<AffinePiece<Num>> done;
  std::vector<AffinePiece<Num>> active;
  // Start with the identity on [0, nu], cut along T's breakpoints.
  detail::split_by_image(AffinePiece<Num>{Num(0), nu, 1, Num(0)}, cuts, slack, active);
  for (int iter = 0; !active.empty(); ++iter) {
    if (iter >= budget) {
      throw ReturnBudgetError("return time budget of " + std::to_string(budget) + " exhausted on (" +
                              to_decimal(NumTraits<Num>::to_real(active.front().lo)) + ", " +
                              to_decimal(NumTraits<Num>::to_real(active.front().hi)) + ")");
    }
    std::vector<AffinePiece<Num>> next;
    for (const auto& piece : active) {
      std::vector<AffinePiece<Num>> split;
      detail::split_by_image(detail::push_forward(t, piece), cuts, slack, split);
      for (auto& q : split) {
        if (!(q.length() > slack)) continue;
        if (!(q.image_hi() > nu + slack)) {
          done.push_back(std::move(q));
        } else {
          next.push_back(std::move(q));
        }
      }
    }
    active = std::move(next);
  }

  std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  std::vector<AffinePiece<Num>> merged;
  for (auto& q : done) {
    if (!merged.empty() && merged.back().slope == q.slope &&
        NumTraits<Num>::same_point(merged.back().offset, q.offset)) {
      merged.back().hi = q.hi;
    } else {
      merged.push_back(std::move(q));
    }
  }
  std::vector<int> order(merged.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return merged[x].image_lo() < merged[y].image_lo(); });
  std::vector<int> values(merged.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    values[order[r]] = merged[order[r]].slope * (static_cast<int>(r) + 1);
  }
  std::vector<Num> lengths;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    // Float pieces are re-anchored so lengths sum to nu exactly enough.
    const Num lo = k == 0 ? Num(0) : merged[k].lo;
    const Num hi = k + 1 == merged.size() ? nu : merged[k + 1].lo;
    lengths.push_back(hi - lo);
  }
  return ExchangeMap<Num>(std::move(lengths), SignedPermutation(std::move(values)), Space::interval);
}

enum class OrbitStopReason { budget, hit_breakpoint };

inline std::string_view to_string(OrbitStopReason r) {
  return r == OrbitStopReason::budget ? "budget" : "hit_breakpoint";
}

template <class Num>
struct OrbitReport {
  std::vector<Num> points;
  OrbitStopReason stopped_reason = OrbitStopReason::budget;
  Num max_gap;
};

// Largest gap between consecutive sorted points, including the two end gaps
// of [0, L] (interval) or the wrap-around gap (circle).
template <class Num>
Num max_gap(std::vector<Num> points, const Num& total, Space space) {
  if (points.empty()) return total;
  std::sort(points.begin(), points.end());
  Num best(0);
  for (std::size_t k = 1; k < points.size(); ++k) best = std::max<Num>(best, points[k] - points[k - 1]);
  if (space == Space::circle) {
    best = std::max<Num>(best, total - points.back() + points.front());
  } else {
    best = std::max<Num>(best, points.front());
    best = std::max<Num>(best, total - points.back());
  }
  return best;
}

// x0 followed by up to n forward images. Stops early when an iterate lands on
// a breakpoint (or x0 is one).
template <class Num>
OrbitReport<Num> orbit(const ExchangeMap<Num>& t, Num x0, long n) {
  OrbitReport<Num> out;
  if (t.space() == Space::circle) x0 = t.wrap(x0);
  out.points.reserve(static_cast<std::size_t>(std::max<long>(n, 0)) + 1);
  out.points.push_back(x0);
  Num x = x0;
  for (long k = 0; k < n; ++k) {
    auto y = t.evaluate(x);
    if (!y) {
      out.stopped_reason = OrbitStopReason::hit_breakpoint;
      break;
    }
    x = *y;
    out.points.push_back(x);
  }
  if (!t.evaluate(out.points.back()) && out.stopped_reason == OrbitStopReason::budget && n == 0) {
    out.stopped_reason = OrbitStopReason::hit_breakpoint;
  }
  out.max_gap = max_gap(out.points, t.total_length(), t.space());
  return out;
}

// Fraction of points in the open interval (lo, hi).
template <class Num>
double visit_frequency(const std::vector<Num>& points, const Num& lo, const Num& hi) {
  if (points.empty()) return 0.0;
  std::size_t hits = 0;
  for (const Num& x : points) hits += (x > lo && x < hi);
  return static_cast<double>(hits) / static_cast<double>(points.size());
}

enum class CertificateKind { interval, flipped_point };

inline std::string_view to_string(CertificateKind k) {
  return k == CertificateKind::interval ? "interval" : "flipped_point";
}

// interval: every x in (lo, hi) satisfies T^period(x) = x.
// flipped_point: lo == hi == the point, and DT^period = -1 there.
struct PeriodicCertificate {
  CertificateKind kind;
  Rational lo;
  Rational hi;
  long period;
  int orientation;
};

// Searches k = 1..max_period for a continuity piece of T^k that is the
// identity or an orientation-reversing map with its fixed point inside.
// The continuity partition is refined one application at a time. Exact
// backend only.
template <class Num>
std::optional<PeriodicCertificate> find_periodic_point(const ExchangeMap<Num>& t, long max_period = 10000) {
  if constexpr (!std::is_same_v<Num, Rational>) {
    (void)t;
    (void)max_period;
    throw std::invalid_argument("find_periodic_point requires the exact rational backend");
  } else {
    const auto& a = t.domain_breakpoints();
    std::vector<Rational> cuts(a.begin() + 1, a.end() - 1);
    // pieces of T^0 = identity, already split along T's breakpoints
    std::vector<AffinePiece<Rational>> pieces;
    for (int i = 1; i <= t.interval_count(); ++i) pieces.push_back({a[i - 1], a[i], 1, Rational(0)});
    for (long k = 1; k <= max_period; ++k) {
      // T^k on the pieces of T^{k-1}, merged where it is a single isometry.
      // Pieces stay sorted by lo throughout.
      std::vector<AffinePiece<Rational>> moved;
      moved.reserve(pieces.size());
      for (const auto& piece : pieces) {
        auto q = detail::push_forward(t, piece);
        if (!moved.empty() && moved.back().hi == q.lo && moved.back().slope == q.slope &&
            moved.back().offset == q.offset) {
          moved.back().hi = q.hi;
        } else {
          moved.push_back(std::move(q));
        }
      }
      for (const auto& q : moved) {
        if (q.slope == 1 && q.offset == 0) {
          return PeriodicCertificate{CertificateKind::interval, q.lo, q.hi, k, 1};
        }
        if (q.slope == -1) {
          const Rational fixed = q.offset / 2;
          if (fixed > q.lo && fixed < q.hi) {
            return PeriodicCertificate{CertificateKind::flipped_point, fixed, fixed, k, -1};
          }
        }
      }
      // Cut again so every piece maps into one interval of T.
      pieces.clear();
      for (const auto& q : moved) detail::split_by_image(q, cuts, Rational(0), pieces);
    }
    return std::nullopt;
  }
}

// Applies T to x `times` times; nullopt if some iterate is a breakpoint.
template <class Num>
std::optional<Num> iterate(const ExchangeMap<Num>& t, Num x, long times) {
  for (long k = 0; k < times; ++k) {
    auto y = t.evaluate(x);
    if (!y) return std::nullopt;
    x = *y;
  }
  return x;
}

// Result of iterating the flip arc of a (3,1)-CET.
template <class Num>
struct ImageIterationReport {
  Arc<Num> flip_arc;                   // I_1 = (a_0, a_1)
  Num a2;                              // the breakpoint not bounding I_1
  long first_overlap = 0;              // N: least n >= 1 with T^n(I_1) meeting I_1
  bool pairwise_disjoint = true;       // T^0(I_1), ..., T^{N-1}(I_1)
  long bound = 0;                      // ceil(|lambda| / |I_1|)
  std::vector<std::vector<AffinePiece<Num>>> images;  // pieces of T^n restricted to I_1, n < N
  std::optional<long> hit_index;       // n0 < N with a_2 inside T^{n0}(I_1)
  std::optional<Num> split_point;      // d in I_1 with T^{n0}(d) = a_2
};

namespace detail {

// Intervals of [0, L) covered by the arc (start, start + length), split at 0.
template <class Num>
std::vector<std::pair<Num, Num>> arc_segments(const Num& start, const Num& length, const Num& total) {
  const Num end = start + length;
  if (end > total) return {{start, total}, {Num(0), end - total}};
  return {{start, end}};
}

template <class Num>
Num overlap(const std::pair<Num, Num>& x, const std::pair<Num, Num>& y) {
  const Num lo = std::max(x.first, y.first);
  const Num hi = std::min(x.second, y.second);
  return hi > lo ? Num(hi - lo) : Num(0);
}

}  // namespace detail

// For a circle exchange map whose glued structure has three arcs and one
// flip: iterates the flip arc I_1 until its image first meets I_1 again,
// checking that the earlier images are pairwise disjoint and locating the
// preimage of a_2 if some earlier image contains it. Iteration is capped at
// `cap` steps.
template <class Num>
ImageIterationReport<Num> interval_image_iteration(const ExchangeMap<Num>& t, long cap = 1000000) {
  if (t.space() != Space::circle) throw std::invalid_argument("interval_image_iteration needs a circle map");
  const CircleStructure<Num> c = glue(t);
  if (c.arc_count() != 3 || c.flip_count() != 1) {
    throw std::invalid_argument("interval_image_iteration needs a (3,1)-CET, got (" + std::to_string(c.arc_count()) +
                                "," + std::to_string(c.flip_count()) + ")");
  }
  const Num total = t.total_length();
  int f = 0;
  while (c.slopes[f] != -1) ++f;
  ImageIterationReport<Num> rep;
  rep.flip_arc = {c.breakpoints[f], c.lengths[f]};
  rep.a2 = c.breakpoints[(f + 2) % 3];
  {
    const Num ratio = total / c.lengths[f];
    if constexpr (std::is_same_v<Num, Rational>) {
      BigInt q = numerator(ratio) / denominator(ratio);
      if (Rational(q) < ratio) ++q;
      rep.bound = q.template convert_to<long>();
    } else {
      rep.bound = static_cast<long>(std::ceil(ratio - NumTraits<Num>::split_slack(ratio)));
    }
  }
  const auto flip_segments = detail::arc_segments(rep.flip_arc.start, rep.flip_arc.length, total);
  const Num slack = NumTraits<Num>::split_slack(total);
  const auto& a = t.domain_breakpoints();
  std::vector<Num> cuts(a.begin() + 1, a.end() - 1);

  // T^0 restricted to I_1, cut along T's breakpoints.
  std::vector<AffinePiece<Num>> current;
  for (const auto& [lo, hi] : flip_segments) detail::split_by_image(AffinePiece<Num>{lo, hi, 1, Num(0)}, cuts, slack, current);
  std::vector<std::pair<Num, Num>> seen;  // union of earlier images, as segments
  for (long n = 0; n < cap; ++n) {
    // n == 0 is I_1 itself; later steps check overlap with I_1 first.
    if (n > 0) {
      bool meets = false;
      for (const auto& q : current) {
        for (const auto& s : flip_segments) {
          if (detail::overlap(std::pair<Num, Num>{q.image_lo(), q.image_hi()}, s) > slack) meets = true;
        }
      }
      if (meets) {
        rep.first_overlap = n;
        return rep;
      }
    }
    for (const auto& q : current) {
      const std::pair<Num, Num> img{q.image_lo(), q.image_hi()};
      for (const auto& s : seen) {
        if (detail::overlap(img, s) > slack) rep.pairwise_disjoint = false;
      }
      if (!rep.hit_index && rep.a2 > img.first + slack && rep.a2 < img.second - slack) {
        rep.hit_index = n;
        rep.split_point = q.slope == 1 ? Num(rep.a2 - q.offset) : Num(q.offset - rep.a2);
      }
    }
    // a_2 can also sit where two pieces of the same image meet (0 ~ L included).
    for (std::size_t x = 0; !rep.hit_index && x < current.size(); ++x) {
      const auto& left = current[x];
      const Num end = left.image_hi();
      const bool at_end = NumTraits<Num>::same_point(end, rep.a2) ||
                          (NumTraits<Num>::same_point(end, total) && NumTraits<Num>::same_point(rep.a2, Num(0)));
      if (!at_end) continue;
      const Num start = NumTraits<Num>::same_point(end, total) ? Num(0) : end;
      for (const auto& right : current) {
        if (NumTraits<Num>::same_point(right.image_lo(), start)) {
          rep.hit_index = n;
          rep.split_point = left.slope == 1 ? Num(end - left.offset) : Num(left.offset - end);
          break;
        }
      }
    }
    for (const auto& q : current) seen.emplace_back(q.image_lo(), q.image_hi());
    rep.images.push_back(current);
    std::vector<AffinePiece<Num>> next;
    for (const auto& q : current) detail::split_by_image(detail::push_forward(t, q), cuts, slack, next);
    current = std::move(next);
  }
  throw ReturnBudgetError("flip arc did not return within " + std::to_string(cap) + " steps");
}

}  // namespace flipiet
