#pragma once

#include <mutex>
#include <vector>

#include "carlitz/linear.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

// A Bernoulli fraction together with the trial-division factorizations of
// its numerator and denominator.
struct BernoulliEntry {
  int64_t n = 0;
  RatFunc value;
  FactorMap num_factors, den_factors;
};

/*
 * CarlitzCtx — the tower of constants of Carlitz theory over F_q(t):
 *   [n] = t^(q^n) - t
 *   D_m = prod_{i=0}^{m-1} [m-i]^(q^i)   (product of all monic of degree m)
 *   L_n = prod_{i=1}^{n} [i]             (lcm of all monic of degree n)
 *   ell_n = (-1)^n L_n, d_m = D_m
 * and the series and numbers built from them. Everything is memoized; the
 * cache is guarded so a context can be shared across threads.
 */
class CarlitzCtx {
 public:
  explicit CarlitzCtx(FieldCtxPtr base);

  const FieldCtxPtr& base() const { return base_; }
  uint64_t q() const { return base_->size(); }

  Poly bracket(int64_t n);  // n >= 1
  Poly bigD(int64_t m);     // m >= 0, D_0 = 1
  Poly bigL(int64_t n);     // n >= 0, L_0 = 1
  Poly ell(int64_t n);      // (-1)^n L_n

  // e(z) = sum z^(q^i)/d_i and its compositional inverse sum z^(q^i)/ell_i,
  // truncated after coefficient index `order`.
  LinearSeries<RatFunc> exp_series(int64_t order);
  LinearSeries<RatFunc> log_series(int64_t order);

  // n!_c = prod d_i^(n_i) over the base-q digits of n
  Poly factorial(int64_t n);

  // binom(z, q^d)_c = sum_{i<=d} z^(q^i) / (d_i ell_{d-i}^(q^i)), an F_q-linear
  // polynomial equal to (1/D_d) prod_{deg a < d} (z - a). The product form is
  // recomputed by enumeration and checked whenever d <= 2 and q <= 3.
  LinearSeries<RatFunc> binomial(int64_t d);

  // B_n from z/e(z) = sum B_n z^n / n!_c, via inversion of the power series
  // e(z)/z computed through `order`; requires order >= n.
  BernoulliEntry bernoulli(int64_t n, int64_t order, int64_t factor_max_deg = 8);

  // closed form (-1)^k prod_{i=1}^{k-1} [k-i]^(q^i-2) / [k]  for B_{q^k-1}
  RatFunc bernoulli_qk_closed(int64_t k);

 private:
  FieldCtxPtr base_;
  std::mutex mu_;
  std::vector<Poly> brackets_, bigd_, bigl_;
};

}  // namespace carlitz
