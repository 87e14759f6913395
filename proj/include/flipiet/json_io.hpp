#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>

#include "json.hpp"

#include "flipiet/constructions.hpp"
#include "flipiet/exchange_map.hpp"
#include "flipiet/int_matrix.hpp"
#include "flipiet/numeric.hpp"
#include "flipiet/perron.hpp"
#include "flipiet/rauzy.hpp"
#include "flipiet/signed_permutation.hpp"

namespace flipiet {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const SignedPermutation& p);
SignedPermutation permutation_from_json(const Json& j);

// Rows of integers; entries too large for int64 are written as strings.
Json to_json(const IntMatrix& m);
Json to_json(const PerronPair& pf);
Json to_json(const FakeClassification& fc);

// Lengths: decimal strings (float) or {"num": "...", "den": "..."} (exact).
Json length_to_json(const Real& x);
Json length_to_json(const Rational& x);

template <class Num>
Num length_from_json(const Json& j);
template <>
Real length_from_json<Real>(const Json& j);
template <>
Rational length_from_json<Rational>(const Json& j);

template <class Num>
Json to_json(const ExchangeMap<Num>& t) {
  Json lengths = Json::array();
  for (const auto& x : t.lengths()) lengths.push_back(length_to_json(x));
  return Json{{"space", std::string(space_name(t.space()))}, {"perm", to_json(t.perm())}, {"lengths", lengths}};
}

// Accepts decimal strings, plain numbers, "p/q" strings and {num, den}
// objects for either backend. Throws JsonFormatError on malformed input,
// non-positive lengths or a dimension mismatch.
template <class Num>
ExchangeMap<Num> map_from_json(const Json& j);

template <class Num>
Json to_json(const StepRecord<Num>& rec) {
  Json lambda = Json::array();
  for (const auto& x : rec.state_after.lambda) lambda.push_back(length_to_json(x));
  return Json{{"type", std::string(1, to_char(rec.type))},
              {"matrix", to_json(rec.matrix)},
              {"nu", length_to_json(rec.nu)},
              {"perm_after", to_json(rec.state_after.perm)},
              {"lambda_after", lambda},
              {"backend", std::string(backend_name(rec.backend))}};
}

// Manifest record for a constructed example (without the map itself).
Json manifest_entry(const NamedExample& ex);

}  // namespace flipiet
