#include "flipiet/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flipiet {

SignedPermutation::SignedPermutation(std::vector<int> signed_values)
    : values_(std::move(signed_values)), inverse_(values_.size(), 0) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("signed permutation must have at least one symbol");
  for (int i = 0; i < n; ++i) {
    const int s = values_[i] < 0 ? -values_[i] : values_[i];
    if (s < 1 || s > n) {
      throw std::invalid_argument("signed permutation entry out of range: " +
                                  std::to_string(values_[i]));
    }
    if (inverse_[s - 1] != 0) {
      throw std::invalid_argument("signed permutation repeats symbol " + std::to_string(s));
    }
    inverse_[s - 1] = i + 1;
  }
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (!cleaned.empty() && cleaned.front() == '(') {
    if (cleaned.back() != ')') throw std::invalid_argument("unbalanced parenthesis in permutation");
    cleaned = cleaned.substr(1, cleaned.size() - 2);
  }
  std::vector<int> values;
  std::stringstream ss(cleaned);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in permutation text");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation entry: " + token);
    }
    if (pos != token.size() || v == 0) {
      throw std::invalid_argument("malformed permutation entry: " + token);
    }
    values.push_back(v);
  }
  return SignedPermutation(std::move(values));
}

int SignedPermutation::flip_count() const {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(), [](int v) { return v < 0; }));
}

std::string SignedPermutation::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += values_[i] < 0 ? '-' : '+';
    out += std::to_string(values_[i] < 0 ? -values_[i] : values_[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& p) { return os << p.to_string(); }

bool is_irreducible(const SignedPermutation& p) {
  const int n = p.size();
  int max_symbol = 0;
  for (int k = 1; k < n; ++k) {
    max_symbol = std::max(max_symbol, p.symbol(k));
    if (max_symbol == k) return false;
  }
  return true;
}

char to_char(RauzyType t) { return t == RauzyType::a ? 'a' : 'b'; }

std::vector<RauzyType> parse_types(std::string_view text) {
  std::vector<RauzyType> out;
  for (char c : text) {
    if (c == 'a') {
      out.push_back(RauzyType::a);
    } else if (c == 'b') {
      out.push_back(RauzyType::b);
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      continue;
    } else {
      throw std::invalid_argument(std::string("unknown Rauzy type '") + c + "'");
    }
  }
  return out;
}

std::string to_string(std::span<const RauzyType> types) {
  std::string s;
  for (RauzyType t : types) s += to_char(t);
  return s;
}

SignedPermutation transition_a(const SignedPermutation& p) {
  const int n = p.size();
  const int last = p.symbol(n);
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    const int s = p.symbol(i);
    const int t = p.sign(i);
    if (p.sign(n) == 1) {
      if (s <= last) {
        out[i - 1] = t * s;
      } else if (s == n) {
        out[i - 1] = t * (last + 1);
      } else {
        out[i - 1] = t * (s + 1);
      }
    } else {
      if (s <= last - 1) {
        out[i - 1] = t * s;
      } else if (s == n) {
        out[i - 1] = -t * last;
      } else {
        out[i - 1] = t * (s + 1);
      }
    }
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation transition_b(const SignedPermutation& p) {
  const int n = p.size();
  const int k = p.position_of(n);
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    if (p.sign(k) == 1) {
      if (i <= k) {
        out[i - 1] = p.signed_value(i);
      } else if (i == k + 1) {
        out[i - 1] = p.signed_value(n);
      } else {
        out[i - 1] = p.signed_value(i - 1);
      }
    } else {
      if (i <= k - 1) {
        out[i - 1] = p.signed_value(i);
      } else if (i == k) {
        out[i - 1] = -p.signed_value(n);
      } else {
        out[i - 1] = p.signed_value(i - 1);
      }
    }
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation transition(const SignedPermutation& p, RauzyType t) {
  return t == RauzyType::a ? transition_a(p) : transition_b(p);
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1u) ? -pi[i] : pi[i];
      out.emplace_back(std::move(v));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::sort(out.begin(), out.end());
  return out;
}

char to_char(FakeCase c) {
  switch (c) {
    case FakeCase::a: return 'a';
    case FakeCase::b: return 'b';
    case FakeCase::c: return 'c';
    case FakeCase::d: return 'd';
  }
  return '?';
}

std::string FakeClassification::to_string() const {
  if (matches.empty()) return "none";
  std::string s = status == FakeStatus::multiple ? "multiple:" : "";
  for (std::size_t k = 0; k < matches.size(); ++k) {
    if (k) s += ',';
    s += "case(";
    s += to_char(matches[k].which);
    s += ")@" + std::to_string(matches[k].index);
  }
  return s;
}

FakeClassification classify_fake_discontinuity(const SignedPermutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("fake discontinuities need n >= 2");
  FakeClassification out;
  for (int i = 1; i <= n - 1; ++i) {
    if (p.symbol(i) == n && p.symbol(i + 1) == 1 && p.sign(i) == 1 && p.sign(i + 1) == 1) {
      out.matches.push_back({FakeCase::a, i});
    }
    if (p.symbol(i) == 1 && p.symbol(i + 1) == n && p.sign(i) == -1 && p.sign(i + 1) == -1) {
      out.matches.push_back({FakeCase::b, i});
    }
  }
  if (p.symbol(1) == p.symbol(n) + 1 && p.sign(1) == 1 && p.sign(n) == 1) {
    out.matches.push_back({FakeCase::c, 0});
  }
  if (p.symbol(1) == p.symbol(n) - 1 && p.sign(1) == -1 && p.sign(n) == -1) {
    out.matches.push_back({FakeCase::d, 0});
  }
  if (out.matches.size() == 1) {
    out.status = FakeStatus::one;
  } else if (out.matches.size() > 1) {
    out.status = FakeStatus::multiple;
  }
  return out;
}

}  // namespace flipiet
