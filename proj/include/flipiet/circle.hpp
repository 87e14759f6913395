#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "flipiet/exchange_map.hpp"
#include "flipiet/numeric.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// Whether the exchange map is continuous across the breakpoint between
// interval `left` and interval `right` once 0 ~ |lambda| is identified. Images
// meet iff the adjacent range endpoints coincide modulo |lambda|, which for
// positive lengths is purely combinatorial.
bool glued_continuous(const SignedPermutation& p, int left, int right);

// An open arc (start, start + length) of the circle [0, L)/(0 ~ L).
template <class Num>
struct Arc {
  Num start;
  Num length;
};

// The genuine discontinuity structure of a circle exchange map after gluing.
// Arc k runs from breakpoints[k] to breakpoints[k+1] (cyclically) and maps by
// x -> slopes[k] * x + offsets[k] (mod L), with x read in unwrapped
// coordinates x in (breakpoints[k], breakpoints[k] + lengths[k]).
template <class Num>
struct CircleStructure {
  Num circumference;
  std::vector<Num> breakpoints;
  std::vector<Num> lengths;
  std::vector<int> slopes;
  std::vector<Num> offsets;

  int arc_count() const { return static_cast<int>(breakpoints.size()); }
  int flip_count() const { return static_cast<int>(std::count(slopes.begin(), slopes.end(), -1)); }

  Num wrap(Num x) const {
    while (x < 0) x += circumference;
    while (!(x < circumference)) x -= circumference;
    return x;
  }

  // Arc index whose interior contains x, or -1 at a breakpoint.
  int arc_containing(const Num& x) const {
    const Num y = wrap(x);
    for (int k = 0; k < arc_count(); ++k) {
      Num rel = y - breakpoints[k];
      if (rel < 0) rel += circumference;
      if (rel > 0 && rel < lengths[k]) return k;
    }
    return -1;
  }
};

// Merges every interval junction (and the glued endpoint) across which the
// circle map is continuous. A map with no genuine discontinuity is reported as
// one arc starting at 0.
template <class Num>
CircleStructure<Num> glue(const ExchangeMap<Num>& t) {
  const int n = t.interval_count();
  const SignedPermutation& p = t.perm();
  // cut[i] for i in 0..n-1: whether a_i (a_0 ~ a_n) is a genuine discontinuity
  std::vector<bool> cut(n, true);
  cut[0] = !glued_continuous(p, n, 1);
  for (int i = 1; i < n; ++i) cut[i] = !glued_continuous(p, i, i + 1);

  CircleStructure<Num> out{t.total_length(), {}, {}, {}, {}};
  const auto& a = t.domain_breakpoints();
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (cut[i]) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.breakpoints.push_back(Num(0));
    out.lengths.push_back(t.total_length());
    out.slopes.push_back(t.slope(1));
    out.offsets.push_back(t.offset(1));
    return out;
  }
  for (int step = 0; step < n; ++step) {
    const int i = (first + step) % n;
    if (!cut[i]) {
      out.lengths.back() += t.lengths()[i];
      continue;
    }
    out.breakpoints.push_back(a[i]);
    out.lengths.push_back(t.lengths()[i]);
    out.slopes.push_back(t.slope(i + 1));
    out.offsets.push_back(t.offset(i + 1));
  }
  // keep breakpoints sorted
  std::vector<int> order(out.breakpoints.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return out.breakpoints[x] < out.breakpoints[y]; });
  CircleStructure<Num> sorted{out.circumference, {}, {}, {}, {}};
  for (int k : order) {
    sorted.breakpoints.push_back(out.breakpoints[k]);
    sorted.lengths.push_back(out.lengths[k]);
    sorted.slopes.push_back(out.slopes[k]);
    sorted.offsets.push_back(out.offsets[k]);
  }
  return sorted;
}

// Builds the interval-coordinate representation of a general circle
// exchange map: arcs of the given lengths start at 0 and are laid out in
// order; their images are laid out in the order given by `arrangement`
// (arrangement.symbol(i) = rank of the image of arc i, sign = orientation),
// starting at `rotation`. When the rotation does not align an image endpoint
// with 0, the arc whose image covers 0 is split at the preimage of 0 and the
// result has one more interval, with a fake breakpoint.
template <class Num>
ExchangeMap<Num> circle_map_from_arcs(const std::vector<Num>& lengths, const SignedPermutation& arrangement,
                                      Num rotation) {
  const int m = arrangement.size();
  if (static_cast<int>(lengths.size()) != m) throw std::invalid_argument("dimension mismatch");
  Num total(0);
  for (const auto& l : lengths) total += l;
  while (rotation < 0) rotation += total;
  while (!(rotation < total)) rotation -= total;

  // image start (before wrapping) of each arc
  std::vector<Num> image_start(m);
  Num cursor = rotation;
  for (int rank = 1; rank <= m; ++rank) {
    const int i = arrangement.position_of(rank);
    image_start[i - 1] = cursor;
    cursor += lengths[i - 1];
  }

  struct Piece {
    Num length;
    int sign;
    Num image_lo;  // in [0, total)
  };
  std::vector<Piece> pieces;
  for (int i = 1; i <= m; ++i) {
    const Num lo = image_start[i - 1];
    const Num hi = lo + lengths[i - 1];
    const int sign = arrangement.sign(i);
    if (hi > total && lo < total) {
      // Image wraps past 0: split the arc at the preimage of total.
      const Num before = total - lo;  // image part (lo, total)
      const Num after = hi - total;   // image part (0, after)
      if (sign == 1) {
        pieces.push_back({before, 1, lo});
        pieces.push_back({after, 1, Num(0)});
      } else {
        pieces.push_back({after, -1, Num(0)});
        pieces.push_back({before, -1, lo});
      }
    } else {
      Num s = lo;
      if (!(s < total)) s -= total;
      pieces.push_back({lengths[i - 1], sign, s});
    }
  }
  std::vector<int> order(pieces.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return pieces[x].image_lo < pieces[y].image_lo; });
  std::vector<int> rank(pieces.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;
  std::vector<Num> out_lengths;
  std::vector<int> signed_values;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    out_lengths.push_back(pieces[k].length);
    signed_values.push_back(pieces[k].sign * rank[k]);
  }
  return ExchangeMap<Num>(std::move(out_lengths), SignedPermutation(std::move(signed_values)), Space::circle);
}

}  // namespace flipiet
