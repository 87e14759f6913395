#include "flipiet/rauzy_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipiet {

RauzyGraph RauzyGraph::build(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("graph construction supports 2 <= n <= 6");
  RauzyGraph g;
  g.n_ = n;
  for (auto& p : all_signed_permutations(n)) {
    if (is_irreducible(p)) g.vertices_.push_back(std::move(p));
  }
  g.successors_.resize(g.vertices_.size());
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    g.successors_[i][0] = g.index_of(transition_a(g.vertices_[i]));
    g.successors_[i][1] = g.index_of(transition_b(g.vertices_[i]));
  }
  return g;
}

int RauzyGraph::index_of(const SignedPermutation& p) const {
  if (p.size() != n_) return -1;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::size_t RauzyGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& s : successors_) count += (s[0] >= 0) + (s[1] >= 0);
  return count;
}

std::optional<SignedPermutation> RauzyGraph::successor(const SignedPermutation& p, RauzyType t) const {
  const int i = index_of(p);
  if (i < 0) return std::nullopt;
  const int j = successor_index(i, t);
  if (j < 0) return std::nullopt;
  return vertices_[j];
}

void for_each_cycle_through(
    const RauzyGraph& g, const SignedPermutation& v, int max_len,
    const std::function<bool(const std::vector<RauzyType>&, const BoolMatrix&)>& visit) {
  const int root = g.index_of(v);
  if (root < 0) throw std::invalid_argument(v.to_string() + " is not a vertex of G_" + std::to_string(g.n()));
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");

  struct Frame {
    int vertex;
    BoolMatrix product;
    int next_edge;  // 0 = a, 1 = b, 2 = exhausted
  };
  std::vector<Frame> stack;
  std::vector<RauzyType> types;
  stack.push_back({root, BoolMatrix::identity(g.n()), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_edge > 1 || static_cast<int>(types.size()) >= max_len) {
      stack.pop_back();
      if (!types.empty()) types.pop_back();
      continue;
    }
    const RauzyType t = top.next_edge == 0 ? RauzyType::a : RauzyType::b;
    ++top.next_edge;
    const int next = g.successor_index(top.vertex, t);
    if (next < 0) continue;
    const auto& here = g.vertices()[top.vertex];
    BoolMatrix product = top.product * BoolMatrix::pattern_of(transition_matrix(here, t));
    types.push_back(t);
    if (next == root) {
      if (!visit(types, product)) return;
      types.pop_back();
      continue;
    }
    stack.push_back({next, std::move(product), 0});
  }
}

std::vector<RauzyPath> find_cycles_through(const RauzyGraph& g, const SignedPermutation& v, int max_len) {
  std::vector<RauzyPath> out;
  for_each_cycle_through(g, v, max_len, [&](const std::vector<RauzyType>& types, const BoolMatrix&) {
    out.push_back(RauzyPath::from_itinerary(v, types));
    return true;
  });
  return out;
}

bool is_special_cycle(const RauzyPath& cycle) {
  if (!cycle.is_cycle() || cycle.length() == 0) return false;
  return is_eventually_positive(path_product(cycle, cycle.length())).eventually_positive;
}

std::optional<RauzyPath> find_special_cycle_through(const RauzyGraph& g, const SignedPermutation& v,
                                                    int max_len) {
  std::optional<std::vector<RauzyType>> best;
  for_each_cycle_through(g, v, max_len, [&](const std::vector<RauzyType>& types, const BoolMatrix& pattern) {
    if ((!best || types.size() < best->size()) && is_eventually_positive(pattern).eventually_positive) {
      best = types;
    }
    return true;
  });
  if (!best) return std::nullopt;
  return RauzyPath::from_itinerary(v, *best);
}

bool is_special(const RauzyPath& path, int max_cycle_len) {
  if (path.is_cycle() && path.length() > 0) return is_special_cycle(path);
  const RauzyGraph g = RauzyGraph::build(path.symbol_count());
  if (!g.contains(path.end())) return false;
  return find_special_cycle_through(g, path.end(), max_cycle_len).has_value();
}

RauzyPath canonicalize_cycle(const RauzyPath& cycle) {
  if (!cycle.is_cycle()) throw std::invalid_argument("canonicalize_cycle requires a cycle");
  RauzyPath best = cycle;
  for (int r = 1; r < cycle.length(); ++r) {
    RauzyPath candidate = cycle.rotated(r);
    if (std::tie(candidate.vertices(), candidate.types()) < std::tie(best.vertices(), best.types())) {
      best = std::move(candidate);
    }
  }
  return best;
}

int default_max_cycle_length(int n) { return n <= 4 ? 12 : 20; }

}  // namespace flipiet
