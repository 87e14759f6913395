#include "flipiet/circle.hpp"

namespace flipiet {

bool glued_continuous(const SignedPermutation& p, int left, int right) {
  const int n = p.size();
  if (p.sign(left) != p.sign(right)) return false;
  const int l = p.symbol(left);
  const int r = p.symbol(right);
  if (p.sign(left) == 1) return r == l + 1 || (l == n && r == 1);
  return l == r + 1 || (l == 1 && r == n);
}

}  // namespace flipiet
