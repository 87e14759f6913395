#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flipiet {

// A signed permutation p = theta * pi on {1..n}, stored as the tuple
// (theta_1 pi_1, ..., theta_n pi_n). All index arguments are 1-based, matching
// the usual notation: symbol(i) = pi(i), sign(i) = theta_i and
// position_of(j) = pi^{-1}(j).
class SignedPermutation {
 public:
  // Throws std::invalid_argument unless |values| is a permutation of {1..n}.
  explicit SignedPermutation(std::vector<int> signed_values);

  // Accepts "(-3,+4,+1,-2)", "(-3,4,1,-2)" or "-3,4,1,-2"; whitespace is ignored.
  static SignedPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int symbol(int i) const { return values_[i - 1] < 0 ? -values_[i - 1] : values_[i - 1]; }
  int sign(int i) const { return values_[i - 1] < 0 ? -1 : 1; }
  int signed_value(int i) const { return values_[i - 1]; }
  int position_of(int symbol) const { return inverse_[symbol - 1]; }
  int flip_count() const;

  std::span<const int> values() const { return values_; }

  // "(-3,+4,+1,-2)"
  std::string to_string() const;

  bool operator==(const SignedPermutation& other) const { return values_ == other.values_; }
  // Entrywise comparison of the signed tuples.
  std::strong_ordering operator<=>(const SignedPermutation& other) const {
    return values_ <=> other.values_;
  }

 private:
  std::vector<int> values_;
  std::vector<int> inverse_;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& p);

// Irreducible iff no k < n has pi({1..k}) = {1..k}. Signs are ignored.
bool is_irreducible(const SignedPermutation& p);

enum class RauzyType { a, b };

char to_char(RauzyType t);
// Parses a string such as "ababbabab" or "a,b,a" into a type sequence.
std::vector<RauzyType> parse_types(std::string_view text);
std::string to_string(std::span<const RauzyType> types);

// The Rauzy transition maps for signed permutations.
SignedPermutation transition_a(const SignedPermutation& p);
SignedPermutation transition_b(const SignedPermutation& p);
SignedPermutation transition(const SignedPermutation& p, RauzyType t);

// Every element of Sigma_n in lexicographic order of the signed tuple.
std::vector<SignedPermutation> all_signed_permutations(int n);

enum class FakeCase { a, b, c, d };

struct FakeMatch {
  FakeCase which;
  // Breakpoint index i (between I_i and I_{i+1}) for cases (a), (b); 0 for
  // the glued endpoint a_0 ~ a_n in cases (c), (d).
  int index;
};

enum class FakeStatus { none, one, multiple };

struct FakeClassification {
  FakeStatus status = FakeStatus::none;
  std::vector<FakeMatch> matches;

  bool has_exactly_one() const { return status == FakeStatus::one; }
  std::string to_string() const;
};

// Checks the four fake-discontinuity patterns. A permutation "has a fake
// discontinuity" only when exactly one pattern occurs; two or more occurrences
// are reported as FakeStatus::multiple.
FakeClassification classify_fake_discontinuity(const SignedPermutation& p);

char to_char(FakeCase c);

}  // namespace flipiet
