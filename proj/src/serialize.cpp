#include "carlitz/serialize.hpp"

namespace carlitz {

Json field_json(const FieldCtxPtr& ctx) {
  Json j;
  j["p"] = ctx->characteristic();
  j["e"] = ctx->degree();
  j["modulus"] = ctx->modulus();
  return j;
}

Json elem_json(const Fq& x) {
  Json j = Json::array();
  for (uint16_t c : x.rep()) j.push_back(c);
  return j;
}

Json elem_json(const RatFunc& r) {
  Json j;
  j["num"] = r.num().to_string();
  j["den"] = r.den().to_string();
  return j;
}

Json elem_json(const LaurentSeries& s) {
  Json j;
  j["lead"] = s.lead_exp();
  Json coeffs = Json::array();
  for (const Fq& c : s.coeffs()) coeffs.push_back(elem_json(c));
  j["coeffs"] = std::move(coeffs);
  if (s.is_exact())
    j["prec"] = "exact";
  else
    j["prec"] = s.prec();
  return j;
}

Json poly_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const Fq& c : p.coeffs()) coeffs.push_back(elem_json(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json factors_json(const FactorMap& fm) {
  Json j;
  j["unit"] = fm.unit.ctx() ? fm.unit.to_string() : "1";
  Json factors = Json::array();
  for (const auto& [p, m] : fm.factors) {
    Json f;
    f["poly"] = p.to_string();
    f["mult"] = m;
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  if (fm.residual) j["residual"] = fm.residual->to_string();
  j["complete"] = fm.complete;
  return j;
}

Json bernoulli_json(const BernoulliEntry& entry) {
  Json j;
  j["schema"] = kSchema;
  j["record"] = "bernoulli";
  j["n"] = entry.n;
  j["value"] = elem_json(entry.value);
  j["num_factors"] = factors_json(entry.num_factors);
  j["den_factors"] = factors_json(entry.den_factors);
  return j;
}

Json report_json(const VerifyReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["record"] = "verify";
  j["id"] = rep.id;
  Json params = Json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = std::move(params);
  if (!rep.lhs.empty()) j["lhs"] = rep.lhs;
  if (!rep.rhs.empty()) j["rhs"] = rep.rhs;
  j["status"] = rep.status_string();
  if (!rep.label.empty()) j["label"] = rep.label;
  if (rep.witness) {
    Json w;
    w["lhs"] = rep.witness->first;
    w["rhs"] = rep.witness->second;
    j["witness"] = std::move(w);
  }
  if (!rep.extra.empty()) {
    Json extra = Json::object();
    for (const auto& [k, v] : rep.extra) extra[k] = v;
    j["extra"] = std::move(extra);
  }
  return j;
}

}  // namespace carlitz
