#include "flipiet/rauzy.hpp"

namespace flipiet {

RauzyPath follow_itinerary(const SignedPermutation& p0, const std::vector<RauzyType>& types) {
  if (!is_irreducible(p0)) throw ReducibleVertexError(0, p0);
  std::vector<SignedPermutation> vertices{p0};
  for (std::size_t i = 0; i < types.size(); ++i) {
    vertices.push_back(transition(vertices.back(), types[i]));
    if (!is_irreducible(vertices.back())) throw ReducibleVertexError(static_cast<int>(i + 1), vertices.back());
  }
  return RauzyPath(std::move(vertices), types);
}

std::string_view to_string(OrbitStop s) {
  switch (s) {
    case OrbitStop::completed: return "completed";
    case OrbitStop::domain_boundary: return "domain_boundary";
    case OrbitStop::reducible: return "reducible";
  }
  return "unknown";
}

}  // namespace flipiet
