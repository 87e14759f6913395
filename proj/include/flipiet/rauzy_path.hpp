#pragma once

#include <vector>

#include "flipiet/signed_permutation.hpp"

namespace flipiet {

// A finite path p(0), ..., p(N) in the signed Rauzy graph together with its
// type itinerary t_1..t_N, where p(i) = t_i(p(i-1)).
class RauzyPath {
 public:
  // Validates that consecutive vertices are related by the labelled map.
  RauzyPath(std::vector<SignedPermutation> vertices, std::vector<RauzyType> types);

  // Builds the vertex sequence by applying the transition maps. No
  // irreducibility check; see follow_itinerary for the checked version.
  static RauzyPath from_itinerary(const SignedPermutation& start, std::vector<RauzyType> types);

  int length() const { return static_cast<int>(types_.size()); }
  int symbol_count() const { return vertices_.front().size(); }
  const std::vector<SignedPermutation>& vertices() const { return vertices_; }
  const std::vector<RauzyType>& types() const { return types_; }
  const SignedPermutation& start() const { return vertices_.front(); }
  const SignedPermutation& end() const { return vertices_.back(); }
  bool is_cycle() const { return vertices_.front() == vertices_.back(); }

  // For a cycle: the same cycle started at vertex `shift`.
  RauzyPath rotated(int shift) const;

  bool operator==(const RauzyPath& other) const = default;

 private:
  std::vector<SignedPermutation> vertices_;
  std::vector<RauzyType> types_;
};

}  // namespace flipiet
