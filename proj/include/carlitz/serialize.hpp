#pragma once

#include <string>

#include "json.hpp"

#include "carlitz/carlitz_tower.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/linear.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

// All CLI-facing records carry schema "carlitz-lab/1" and are emitted with
// deterministic key order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "carlitz-lab/1";

Json field_json(const FieldCtxPtr& ctx);       // {p, e, modulus}
Json elem_json(const Fq& x);                   // ascending coefficient list
Json elem_json(const RatFunc& r);              // {num, den} in text form
Json elem_json(const LaurentSeries& s);        // {lead, coeffs, prec}
Json poly_json(const Poly& p);                 // {coeffs: [[..], ..]}
Json factors_json(const FactorMap& fm);
Json bernoulli_json(const BernoulliEntry& entry);
Json report_json(const VerifyReport& rep);

template <class T>
Json series_json(const LinearSeries<T>& f, const std::string& field_desc) {
  Json j;
  j["schema"] = kSchema;
  j["record"] = "linear-series";
  j["q"] = f.q();
  j["field"] = field_desc;
  Json coeffs = Json::array();
  for (const T& c : f.coeffs()) coeffs.push_back(elem_json(c));
  j["coeffs"] = std::move(coeffs);
  j["kind"] = f.is_polynomial() ? "polynomial" : "truncated";
  return j;
}

template <class T>
Json table_json(const CoeffTable<T>& tab) {
  Json j;
  j["schema"] = kSchema;
  j["record"] = "coeff-table";
  j["family"] = family_name(tab.family);
  j["q"] = tab.q;
  j["N"] = tab.n_max;
  if (!tab.source.empty()) j["source"] = tab.source;
  if (tab.degenerate_zero) j["degenerate_zero"] = true;
  Json values = Json::object();
  for (int64_t i = 0; i <= tab.n_max; ++i)
    if (!elem_is_zero(tab.v[size_t(i)])) values[std::to_string(i)] = elem_str(tab.v[size_t(i)]);
  j["values"] = std::move(values);
  return j;
}

}  // namespace carlitz
