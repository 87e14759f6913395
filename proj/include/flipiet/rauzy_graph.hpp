#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "flipiet/int_matrix.hpp"
#include "flipiet/rauzy_path.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// The signed Rauzy graph G_n: vertices are the irreducible signed
// permutations, with an a-edge p -> a(p) and a b-edge p -> b(p) whenever the
// target is irreducible too.
class RauzyGraph {
 public:
  // Supported for 2 <= n <= 6.
  static RauzyGraph build(int n);

  int n() const { return n_; }
  const std::vector<SignedPermutation>& vertices() const { return vertices_; }
  std::size_t edge_count() const;

  bool contains(const SignedPermutation& p) const { return index_of(p) >= 0; }
  std::optional<SignedPermutation> successor(const SignedPermutation& p, RauzyType t) const;

  // -1 when p is not a vertex.
  int index_of(const SignedPermutation& p) const;
  int successor_index(int vertex, RauzyType t) const { return successors_[vertex][t == RauzyType::a ? 0 : 1]; }

 private:
  int n_ = 0;
  std::vector<SignedPermutation> vertices_;  // sorted
  std::vector<std::array<int, 2>> successors_;
};

// Visits every closed walk v -> ... -> v of length <= max_len that does not
// pass through v before its end. Other vertices may repeat. The callback gets
// the type sequence and the zero pattern of the product matrix and returns
// false to stop the search.
void for_each_cycle_through(
    const RauzyGraph& g, const SignedPermutation& v, int max_len,
    const std::function<bool(const std::vector<RauzyType>&, const BoolMatrix&)>& visit);

// All cycles through v of length <= max_len, each starting at v. Throws
// std::invalid_argument when v is not a vertex of g.
std::vector<RauzyPath> find_cycles_through(const RauzyGraph& g, const SignedPermutation& v, int max_len);

// A cycle is special when its product matrix is eventually positive.
bool is_special_cycle(const RauzyPath& cycle);

// Shortest special cycle through v (ties broken by DFS order), searching up
// to max_len. nullopt means "not found within the bound".
std::optional<RauzyPath> find_special_cycle_through(const RauzyGraph& g, const SignedPermutation& v,
                                                    int max_len);

// Cycle: eventual positivity of its product. Open path: its endpoint lies on a
// special cycle of length <= max_cycle_len.
bool is_special(const RauzyPath& path, int max_cycle_len = 20);

// Lexicographically least rotation, comparing vertex tuples entrywise. Two
// cycles are shift equivalent iff their canonical forms are equal.
RauzyPath canonicalize_cycle(const RauzyPath& cycle);

// Default DFS bounds: 12 for n = 4, 20 for n >= 5.
int default_max_cycle_length(int n);

}  // namespace flipiet
