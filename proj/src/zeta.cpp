#include "carlitz/zeta.hpp"

#include <map>
#include <stdexcept>

#include "carlitz/linear.hpp"
#include "carlitz/powersum.hpp"

namespace carlitz {

namespace {

int64_t deg_bigL(int64_t q, int64_t n) {
  // deg L_n = q + q^2 + ... + q^n, saturating
  int64_t acc = 0, qp = 1;
  for (int64_t i = 1; i <= n; ++i) {
    qp = sat_mul(qp, q);
    acc = sat_add(acc, qp);
  }
  return acc;
}

int64_t deg_bigD(int64_t q, int64_t m) { return sat_mul(m, ipow_sat(q, m)); }

}  // namespace

LaurentSeries powersum_series(CarlitzCtx& ct, int64_t d, int64_t s, int64_t prec) {
  if (s < 1) throw std::invalid_argument("powersum_series: weight must be >= 1");
  if (d < 0) throw std::invalid_argument("powersum_series: d must be >= 0");
  const FieldCtxPtr& base = ct.base();
  if (d == 0) return LaurentSeries::one(base).truncated(prec);
  int64_t q = int64_t(ct.q());

  // binom(z, q^d)_c coefficients 1/(d_i ell_{d-i}^(q^i)) as Laurent values;
  // anything with valuation >= prec is zero to precision and never
  // materialized exactly
  std::vector<LaurentSeries> coeffs;
  bool all_zero = true;
  for (int64_t i = 0; i <= d; ++i) {
    int64_t val = sat_add(deg_bigD(q, i), sat_mul(ipow_sat(q, i), deg_bigL(q, d - i)));
    if (val >= prec) {
      coeffs.push_back(LaurentSeries::zero(base, prec));
    } else {
      Poly den = ct.bigD(i) * ct.ell(d - i).pow(ipow(q, i));
      coeffs.push_back(laurent_expand(RatFunc(Poly::one(base), den), prec));
      all_zero = false;
    }
  }
  if (all_zero) return LaurentSeries::zero(base, prec);

  // pad with exact zeros so the truncated-series guard in a_table is honest:
  // beyond index d the polynomial has no terms at all
  while (ipow_sat(q, int64_t(coeffs.size())) <= s)
    coeffs.push_back(LaurentSeries::zero(base, kValInf));

  auto f = LinearSeries<LaurentSeries>::truncated(uint64_t(q), std::move(coeffs));
  auto a = a_table(f, s);
  return a.at(s).truncated(prec);
}

LaurentSeries zeta(CarlitzCtx& ct, int64_t s, int64_t prec,
                   std::optional<int64_t> d_max) {
  if (s == 0) throw std::invalid_argument("zeta: s must be nonzero");
  if (prec < 1) throw std::invalid_argument("zeta: prec must be >= 1");
  const FieldCtxPtr& base = ct.base();
  if (s > 0) {
    int64_t D = d_max ? *d_max : (prec + s - 1) / s;
    LaurentSeries acc = LaurentSeries::zero(base, prec);
    for (int64_t d = 0; d <= D; ++d) acc += powersum_series(ct, d, s, prec);
    return acc.truncated(prec);
  }
  if (!d_max)
    throw std::invalid_argument("zeta: negative weight needs an explicit d_max");
  // exact partial sum of polynomial-valued power sums S_d(s), s < 0
  RatFunc acc = RatFunc::zero(base);
  for (int64_t d = 0; d <= *d_max; ++d) {
    auto f = ct.binomial(d);
    acc += alpha_table(f, -s).at(-s);
  }
  if (!acc.den().is_one())
    throw std::logic_error("zeta: negative-weight power sum is not polynomial");
  return LaurentSeries::of_poly(acc.num());
}

LaurentSeries multizeta(CarlitzCtx& ct, int64_t s1, int64_t s2, int64_t prec) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("multizeta: weights must be >= 1");
  if (prec < 1) throw std::invalid_argument("multizeta: prec must be >= 1");
  const FieldCtxPtr& base = ct.base();
  std::map<int64_t, LaurentSeries> cache2;  // S_{d2}(s2)
  LaurentSeries acc = LaurentSeries::zero(base, prec);
  for (int64_t d1 = 1; s1 * d1 <= prec; ++d1) {
    LaurentSeries S1 = powersum_series(ct, d1, s1, prec);
    if (S1.is_zero_to_prec()) continue;
    for (int64_t d2 = 0; d2 < d1 && s1 * d1 + s2 * d2 <= prec; ++d2) {
      auto it = cache2.find(d2);
      if (it == cache2.end())
        it = cache2.emplace(d2, powersum_series(ct, d2, s2, prec)).first;
      acc += S1 * it->second;
    }
  }
  return acc.truncated(prec);
}

LaurentSeries eval_zeta_query(CarlitzCtx& ct, const ZetaQuery& query) {
  if (query.weights.size() == 1)
    return zeta(ct, query.weights[0], query.prec, query.d_max);
  if (query.weights.size() == 2)
    return multizeta(ct, query.weights[0], query.weights[1], query.prec);
  throw std::invalid_argument("zeta query takes one or two weights");
}

VerifyReport verify_multizeta_identity(CarlitzCtx& ct, int64_t n,
                                       const std::vector<int64_t>& ks, int64_t prec) {
  int64_t q = int64_t(ct.q());
  int64_t s = int64_t(ks.size());
  if (n < 1) throw std::invalid_argument("multizeta identity: n must be >= 1");
  if (s < 1 || s >= q) throw std::invalid_argument("multizeta identity: need 1 <= s < q");
  int64_t sum_qk = 0;
  for (int64_t ki : ks) {
    if (ki < 0 || ki >= n)
      throw std::invalid_argument("multizeta identity: need 0 <= k_i < n");
    sum_qk += ipow(q, ki);
  }
  int64_t w1 = ipow(q, n) - sum_qk;
  int64_t w2 = (q - 1) * ipow(q, n);
  int64_t w3 = ipow(q, n + 1) - sum_qk;

  LaurentSeries lhs = multizeta(ct, w1, w2, prec);

  Poly num = Poly::one(ct.base());
  for (int64_t ki : ks) num *= ct.bracket(n - ki).pow(ipow(q, ki));
  if (s % 2) num = num * ct.base()->from_int(-1);
  RatFunc factor(num, ct.ell(1).pow(ipow(q, n)));
  LaurentSeries rhs = laurent_expand(factor, prec) * zeta(ct, w3, prec);

  auto agree = lhs.agrees_with(rhs);
  VerifyReport rep;
  rep.id = "multizeta";
  rep.add_param("q", std::to_string(q));
  rep.add_param("n", std::to_string(n));
  rep.add_param("s", std::to_string(s));
  {
    std::string kstr;
    for (size_t i = 0; i < ks.size(); ++i) kstr += (i ? "," : "") + std::to_string(ks[i]);
    rep.add_param("ks", kstr);
  }
  rep.add_param("weights", std::to_string(w1) + "," + std::to_string(w2) + " vs " +
                               std::to_string(w3));
  rep.add_param("prec", std::to_string(prec));
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  rep.status = VerifyReport::resolve(agree.ok, true);
  if (!agree.ok) {
    rep.witness = {rep.lhs, rep.rhs};
    rep.add_extra("first_mismatch_exponent", std::to_string(agree.first_mismatch));
  }
  rep.add_extra("coefficients_compared", std::to_string(agree.hi - agree.lo));
  return rep;
}

VerifyReport euler_carlitz_crosscheck(CarlitzCtx& ct, int64_t n, int64_t m,
                                      int64_t prec) {
  int64_t q = int64_t(ct.q());
  if (n < 1 || m < 1)
    throw std::invalid_argument("euler_carlitz: weights must be positive");
  if (q > 2 && (n % (q - 1) || m % (q - 1)))
    throw std::invalid_argument("euler_carlitz: weights must be 'even' ((q-1)-divisible)");

  VerifyReport rep;
  rep.id = "euler-carlitz";
  rep.add_param("q", std::to_string(q));
  rep.add_param("n", std::to_string(n));
  rep.add_param("m", std::to_string(m));
  rep.add_param("prec", std::to_string(prec));

  RatFunc Bn = ct.bernoulli(n, n).value;
  RatFunc Bm = ct.bernoulli(m, m).value;
  if (Bn.is_zero() || Bm.is_zero()) {
    rep.status = VerifyReport::Status::Fail;
    rep.label = "bernoulli-vanishes";
    return rep;
  }

  auto packaged = [&](int64_t w, const RatFunc& B) {
    RatFunc F = RatFunc(ct.factorial(w)) / B;
    LaurentSeries Fs = F.den().is_one()
                           ? LaurentSeries::of_poly(F.num())
                           : laurent_expand(F, prec + 2 * (F.den().deg() + 1));
    return zeta(ct, w, prec) * Fs;
  };
  LaurentSeries X = packaged(n, Bn).pow(m);
  LaurentSeries Y = packaged(m, Bm).pow(n);

  auto agree = X.agrees_with(Y);
  rep.lhs = X.to_string();
  rep.rhs = Y.to_string();
  rep.status = VerifyReport::resolve(agree.ok && agree.hi > agree.lo, true);
  if (!agree.ok) rep.witness = {rep.lhs, rep.rhs};
  rep.add_extra("coefficients_compared", std::to_string(agree.hi - agree.lo));
  return rep;
}

}  // namespace carlitz
