#include "flipiet/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "flipiet/circle.hpp"

namespace flipiet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

SampledCet sample_cet(int arcs, int flips, std::uint64_t seed, bool require_genuine) {
  if (arcs < 1 || flips < 0 || flips > arcs) throw std::invalid_argument("need 0 <= flips <= arcs and arcs >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(1, 1000);
  for (int attempt = 1; attempt <= 10000; ++attempt) {
    std::vector<long> ints(arcs);
    long total = 0;
    for (auto& x : ints) total += x = length_dist(rng);
    std::vector<int> symbols(arcs);
    for (int i = 0; i < arcs; ++i) symbols[i] = i + 1;
    std::shuffle(symbols.begin(), symbols.end(), rng);
    std::vector<int> flipped(arcs, 0);
    std::fill(flipped.begin(), flipped.begin() + flips, 1);
    std::shuffle(flipped.begin(), flipped.end(), rng);
    for (int i = 0; i < arcs; ++i) {
      if (flipped[i]) symbols[i] = -symbols[i];
    }
    const long r = std::uniform_int_distribution<long>(0, total - 1)(rng);

    std::vector<Rational> lengths;
    for (long x : ints) lengths.emplace_back(x, total);
    SignedPermutation arrangement(symbols);
    const Rational rotation(r, total);
    ExchangeMap<Rational> map = circle_map_from_arcs(lengths, arrangement, rotation);
    if (require_genuine) {
      const auto glued = glue(map);
      if (glued.arc_count() != arcs || glued.flip_count() != flips) continue;
    }
    return {std::move(map), std::move(lengths), std::move(arrangement), rotation, attempt};
  }
  throw std::runtime_error("no admissible sample within 10000 draws");
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace flipiet
