#pragma once

#include <optional>
#include <vector>

#include "carlitz/carlitz_tower.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

/*
 * Truncated Carlitz-Goss zeta and depth-2 multizeta values in F_q((1/t)).
 *
 * For positive weight s, every term of S_d(s) has u-valuation >= s*d, so the
 * degree cutoff D = ceil(prec/s) makes the reported precision provable, not
 * heuristic. Negative weights have no stated vanishing degree; they require
 * an explicit d_max and yield an exact partial sum.
 */
struct ZetaQuery {
  std::vector<int64_t> weights;  // one entry: zeta(s); two: multizeta(s1, s2)
  int64_t prec = 1;
  std::optional<int64_t> d_max;
};

// S_d(s) for s >= 1 as a Laurent series trusted below prec, computed through
// the a-family recursion of binom(z, q^d)_c over truncated Laurent
// coefficients (S_d(k) = a_k). Tower constants whose valuation reaches prec
// enter as zero-to-precision, which keeps even huge d cheap and sound.
LaurentSeries powersum_series(CarlitzCtx& ct, int64_t d, int64_t s, int64_t prec);

// zeta_c(s) = sum_d S_d(s). Positive s: trusted below prec, degree cutoff
// derived (or d_max override). Negative s: exact partial sum over
// d <= d_max, which must be supplied.
LaurentSeries zeta(CarlitzCtx& ct, int64_t s, int64_t prec,
                   std::optional<int64_t> d_max = {});

// zeta(s1, s2) = sum_{d1 > d2 >= 0} S_{d1}(s1) S_{d2}(s2), s1, s2 >= 1,
// truncated where d1 s1 + d2 s2 exceeds prec
LaurentSeries multizeta(CarlitzCtx& ct, int64_t s1, int64_t s2, int64_t prec);

// dispatch over a query: one weight -> zeta, two -> multizeta
LaurentSeries eval_zeta_query(CarlitzCtx& ct, const ZetaQuery& query);

// zeta(q^n - sum q^{k_i}, (q-1) q^n)
//   = (-1)^s / ell_1^(q^n) * prod [n-k_i]^(q^{k_i}) * zeta(q^{n+1} - sum q^{k_i})
// for n > 0, 1 <= s < q, 0 <= k_i < n; both sides compared as Laurent series
// to the common trusted precision.
VerifyReport verify_multizeta_identity(CarlitzCtx& ct, int64_t n,
                                       const std::vector<int64_t>& ks, int64_t prec);

// (zeta(n) n!_c / B_n)^m = (zeta(m) m!_c / B_m)^n for 'even' n, m: both sides
// are the nm-th power of the period, which is never constructed.
VerifyReport euler_carlitz_crosscheck(CarlitzCtx& ct, int64_t n, int64_t m,
                                      int64_t prec);

}  // namespace carlitz
