#include "carlitz/powersum.hpp"

#include <stdexcept>

namespace carlitz {

RatFunc powersum_brute(const FieldCtxPtr& ctx, const PowerSumQuery& query) {
  if (query.k == 0) throw std::invalid_argument("powersum: k must be nonzero");
  if (query.d < 0) throw std::invalid_argument("powersum: d must be >= 0");
  uint64_t terms = 1;
  for (int64_t i = 0; i < query.d; ++i) {
    terms *= ctx->size();
    if (terms > 1000000) throw std::invalid_argument("powersum_brute: q^d exceeds the guard");
  }
  RatFunc acc = RatFunc::zero(ctx);
  auto add_degree = [&](int64_t deg) {
    for_each_monic(ctx, deg, [&](const Poly& a) {
      acc += RatFunc(a).pow(-query.k);  // positive k: a^-k, negative k: a^|k|
    });
  };
  if (query.scope == PowerSumQuery::Scope::ExactDegree) {
    add_degree(query.d);
  } else {
    for (int64_t deg = 0; deg < query.d; ++deg) add_degree(deg);
  }
  return acc;
}

PowerSumResult powersum_fast(CarlitzCtx& ct, const PowerSumQuery& query) {
  if (query.k == 0) throw std::invalid_argument("powersum: k must be nonzero");
  if (query.d < 0) throw std::invalid_argument("powersum: d must be >= 0");
  int64_t q = int64_t(ct.q());
  int64_t k = query.k >= 0 ? query.k : -query.k;
  bool below = query.scope == PowerSumQuery::Scope::BelowDegree;
  bool even = (q == 2) || k % (q - 1) == 0;
  if (below && !even) {
    // the h/H identifications only hold for 'even' exponents
    return {powersum_brute(ct.base(), query), false};
  }
  if (ipow(q, query.d) > (int64_t(1) << 22) || query.d * ipow(q, query.d) > 2000000)
    throw std::invalid_argument("powersum_fast: degree too large to materialize binom constants");
  auto f = ct.binomial(query.d);
  if (below) {
    if (query.k > 0) return {h_table(f, k).at(k), true};
    return {H_table(f, k).at(k), true};
  }
  if (query.k > 0) return {a_table(f, k).at(k), true};
  return {alpha_table(f, k).at(k), true};
}

RatFunc closed_form(CarlitzCtx& ct, int64_t d, int64_t i, Family family) {
  if (d < 1) throw std::invalid_argument("closed_form: d must be >= 1");
  if (i < 0) throw std::invalid_argument("closed_form: i must be >= 0");
  int64_t q = int64_t(ct.q());
  auto r = [&](const Poly& p) { return RatFunc(p); };
  switch (family) {
    case Family::h:
      return r(ct.ell(d + i - 1)) / (r(ct.ell(i)) * r(ct.ell(d - 1)).pow(ipow(q, i)));
    case Family::a:
      if (i < 1) throw std::invalid_argument("closed_form: a family needs i >= 1");
      return r(ct.ell(d + i - 1)) / (r(ct.ell(i - 1)) * r(ct.ell(d)).pow(ipow(q, i)));
    case Family::H:
      if (i < d) throw std::invalid_argument("closed_form: H family needs i >= d");
      return r(ct.bigD(i - 1)).pow(q) /
             (r(ct.ell(d - 1)) * r(ct.bigD(i - d)).pow(ipow(q, d)));
    case Family::alpha:
      if (i < d) throw std::invalid_argument("closed_form: alpha family needs i >= d");
      return r(ct.bigD(i)) / (r(ct.ell(d)) * r(ct.bigD(i - d)).pow(ipow(q, d)));
  }
  throw std::logic_error("closed_form: unknown family");
}

}  // namespace carlitz
