#include "flipiet/json_io.hpp"

#include <limits>

namespace flipiet {

Json to_json(const SignedPermutation& p) { return Json(p.values()); }

SignedPermutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("permutation must be an array of signed integers");
  std::vector<int> values;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw JsonFormatError("permutation entries must be integers");
    values.push_back(v.get<int>());
  }
  try {
    return SignedPermutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string("invalid permutation: ") + e.what());
  }
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.size(); ++c) {
      const BigInt& e = m(r, c);
      if (e <= std::numeric_limits<long long>::max() && e >= std::numeric_limits<long long>::min()) {
        row.push_back(e.convert_to<long long>());
      } else {
        row.push_back(e.str());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const PerronPair& pf) {
  Json lambda = Json::array();
  for (Real x : pf.lambda) lambda.push_back(to_decimal(x));
  return Json{{"sigma", to_decimal(pf.sigma)},
              {"lambda", lambda},
              {"residual", to_decimal(pf.residual)},
              {"iterations", pf.iterations}};
}

Json to_json(const FakeClassification& fc) {
  Json matches = Json::array();
  for (const auto& m : fc.matches) {
    Json entry{{"case", std::string(1, to_char(m.which))}};
    if (m.index > 0) entry["index"] = m.index;
    matches.push_back(entry);
  }
  const char* status = fc.status == FakeStatus::none ? "none" : fc.status == FakeStatus::one ? "one" : "multiple";
  return Json{{"status", status}, {"matches", matches}};
}

Json length_to_json(const Real& x) { return to_decimal(x); }

Json length_to_json(const Rational& x) {
  return Json{{"num", boost::multiprecision::numerator(x).str()},
              {"den", boost::multiprecision::denominator(x).str()}};
}

namespace {

Rational exact_from_json(const Json& j) {
  try {
    if (j.is_object()) {
      if (!j.contains("num") || !j.contains("den")) throw JsonFormatError("rational length needs num and den");
      auto part = [](const Json& v) {
        if (v.is_number_integer()) return BigInt(v.get<long long>());
        if (v.is_string()) return parse_bigint(v.get<std::string>());
        throw JsonFormatError("num/den must be integers or integer strings");
      };
      const BigInt den = part(j["den"]);
      if (den == 0) throw JsonFormatError("zero denominator");
      return Rational(part(j["num"]), den);
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return NumTraits<Rational>::from_real(j.get<double>());
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw JsonFormatError(std::string("malformed length: ") + e.what());
  }
  throw JsonFormatError("length must be a decimal string, number or {num, den} object");
}

}  // namespace

template <>
Rational length_from_json<Rational>(const Json& j) {
  return exact_from_json(j);
}

template <>
Real length_from_json<Real>(const Json& j) {
  if (j.is_string() && j.get<std::string>().find('/') == std::string::npos) {
    try {
      return parse_decimal(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JsonFormatError(e.what());
    }
  }
  if (j.is_number()) return j.get<double>();
  return NumTraits<Rational>::to_real(exact_from_json(j));
}

template <class Num>
ExchangeMap<Num> map_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("exchange map must be a JSON object");
  if (!j.contains("perm") || !j.contains("lengths")) throw JsonFormatError("exchange map needs perm and lengths");
  Space space = Space::interval;
  if (j.contains("space")) {
    const std::string s = j["space"].is_string() ? j["space"].get<std::string>() : "";
    if (s == "circle") {
      space = Space::circle;
    } else if (s != "interval") {
      throw JsonFormatError("space must be \"interval\" or \"circle\"");
    }
  }
  SignedPermutation perm = permutation_from_json(j["perm"]);
  if (!j["lengths"].is_array()) throw JsonFormatError("lengths must be an array");
  std::vector<Num> lengths;
  for (const auto& x : j["lengths"]) lengths.push_back(length_from_json<Num>(x));
  if (static_cast<int>(lengths.size()) != perm.size()) {
    throw JsonFormatError("dimension mismatch: " + std::to_string(lengths.size()) + " lengths for a permutation of " +
                          std::to_string(perm.size()) + " symbols");
  }
  for (const auto& x : lengths) {
    if (!(x > 0)) throw JsonFormatError("lengths must be strictly positive");
  }
  return ExchangeMap<Num>(std::move(lengths), std::move(perm), space);
}

template ExchangeMap<Real> map_from_json<Real>(const Json&);
template ExchangeMap<Rational> map_from_json<Rational>(const Json&);

Json manifest_entry(const NamedExample& ex) {
  Json flips = Json::array();
  for (int i = 1; i <= ex.iet.interval_count(); ++i) {
    if (ex.iet.perm().sign(i) == -1) flips.push_back(i);
  }
  Json out{{"name", ex.name},
           {"iet", {{"n", ex.as_iet.n}, {"f", ex.as_iet.f}}},
           {"cet", {{"n", ex.as_cet.n}, {"f", ex.as_cet.f}}},
           {"flip_positions", flips},
           {"fake_discontinuity", to_json(ex.fake)},
           {"path", {{"start", to_json(ex.path.start)}, {"types", to_string(ex.path.types)}}}};
  if (ex.perron) out["perron"] = to_json(*ex.perron);
  if (!ex.notes.empty()) out["notes"] = ex.notes;
  return out;
}

}  // namespace flipiet
