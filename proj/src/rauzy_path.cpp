#include "flipiet/rauzy_path.hpp"

#include <stdexcept>

namespace flipiet {

RauzyPath::RauzyPath(std::vector<SignedPermutation> vertices, std::vector<RauzyType> types)
    : vertices_(std::move(vertices)), types_(std::move(types)) {
  if (vertices_.size() != types_.size() + 1) {
    throw std::invalid_argument("path needs exactly one more vertex than types");
  }
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (transition(vertices_[i], types_[i]) != vertices_[i + 1]) {
      throw std::invalid_argument("vertex " + std::to_string(i + 1) +
                                  " is not the labelled successor of its predecessor");
    }
  }
}

RauzyPath RauzyPath::from_itinerary(const SignedPermutation& start, std::vector<RauzyType> types) {
  std::vector<SignedPermutation> vertices{start};
  vertices.reserve(types.size() + 1);
  for (RauzyType t : types) vertices.push_back(transition(vertices.back(), t));
  return RauzyPath(std::move(vertices), std::move(types));
}

RauzyPath RauzyPath::rotated(int shift) const {
  if (!is_cycle()) throw std::invalid_argument("only cycles can be rotated");
  const int n = length();
  if (n == 0) return *this;
  shift = ((shift % n) + n) % n;
  std::vector<SignedPermutation> vertices;
  std::vector<RauzyType> types;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(vertices_[(i + shift) % n]);
    types.push_back(types_[(i + shift) % n]);
  }
  vertices.push_back(vertices.front());
  return RauzyPath(std::move(vertices), std::move(types));
}

}  // namespace flipiet
