#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flipiet/exchange_map.hpp"
#include "flipiet/numeric.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// Seed of sample i, derived from the run seed by two splitmix64 rounds.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// A random rational circle exchange map with `arcs` genuine discontinuities
// and `flips` flipped arcs. Arc lengths are integers in [1, 1000]; images are
// arranged by a random signed permutation with exactly `flips` flips and
// rotated by a random integer r in [0, L). Draws that glue to fewer arcs are
// rejected unless `require_genuine` is false (two arcs that are both flipped
// always glue into one reflection, so (2,2) data needs the relaxed mode).
// The map is normalized to total length 1 and stored in interval
// coordinates, so it may have one more (fake) breakpoint than arcs.
struct SampledCet {
  ExchangeMap<Rational> map;
  std::vector<Rational> arc_lengths;
  SignedPermutation arrangement;
  Rational rotation;
  int attempts = 0;
};

SampledCet sample_cet(int arcs, int flips, std::uint64_t seed, bool require_genuine = true);

// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
// concurrency). Each index runs exactly once; results must be written to
// per-index slots.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace flipiet
