#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carlitz/fq.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

/*
 * Randomized verification of the two multivariable linear-form identities
 * over an extension F_{q^m}, plus the Lucas-theorem multinomial congruence
 * they are equivalent to. Instances are sampled with rejection (independent
 * b, nonzero denominators); the identities are then evaluated exactly.
 */

struct Thm2Instance {
  FieldCtxPtr field;           // F_{q^m}
  uint64_t q = 0;              // linearity base
  int64_t d = 0, s = 0;
  std::vector<Fq> theta;       // the q embedded elements of F_q, index order
  std::vector<Fq> b;           // d, F_q-linearly independent
  std::vector<std::vector<Fq>> B;  // [i][j], d x s
};

struct Thm5Instance {
  FieldCtxPtr field;
  uint64_t q = 0;
  int64_t d = 0, s = 0;
  std::vector<Fq> theta;
  std::vector<Fq> b;
  std::vector<std::vector<Fq>> B;
  Fq mu;                       // outside span(b): every mu + sum theta_i b_i nonzero
  std::vector<Fq> M;           // s
};

// lhs = prod_j sum_{theta != 0} (sum_i theta_i B_ij)/(sum_i theta_i b_i)
// rhs = (-1)^(s-1) sum_{theta != 0} prod_j (sum_i theta_i B_ij) / (...)^s
// monic_variant: restrict theta to tuples whose last nonzero entry is 1 and
// drop the sign.
std::pair<Fq, Fq> thm2_sides(const Thm2Instance& inst, bool monic_variant = false);

// affine reading (default): numerators M_j + sum_i theta_i B_ij over
// denominators mu + sum_i theta_i b_i, theta over all of F_q^d;
// rhs = (sum_theta 1/(mu + ...))^(s-1) * sum_theta prod_j (...)/(mu + ...).
// literal = true evaluates the summed-constant reading (d*M_j + ...,
// d*mu + ...); when p | d that reading has a forced zero denominator at
// theta = 0 and throws.
std::pair<Fq, Fq> thm5_sides(const Thm5Instance& inst, bool literal = false);

Thm2Instance sample_thm2(const FieldCtxPtr& ext, int64_t d, int64_t s,
                         SplitMix64& rng, int64_t* resamples = nullptr);
Thm5Instance sample_thm5(const FieldCtxPtr& ext, int64_t d, int64_t s,
                         SplitMix64& rng, int64_t* resamples = nullptr);

enum class RandomizedKind { Thm2, Thm5 };

// `trials` independent instances over F_{q^m}; the per-trial seed is
// seed ^ trial-index. The report carries the Schwartz-Zippel data: the total
// degree bound D of the cleared polynomial identity (s(q^d-1)/(q-1) for
// thm2, s q^d for thm5), the per-trial bound D/q^m, and the log2 of the
// whole-run bound (D/q^m)^trials.
VerifyReport verify_randomized(RandomizedKind which, const FieldCtxPtr& base,
                               int64_t d, int64_t s, int64_t trials, uint64_t seed,
                               uint32_t m);

// multinomial coefficient (top; parts) mod p by digitwise Lucas products;
// parts must be nonnegative and sum to top
int64_t multinomial_mod_p(uint32_t p, int64_t top, const std::vector<int64_t>& parts);

// The multinomial congruence equivalent to Theorem 3: with M = sum q^{k_i} - s
// and all parts positive and 'even' ((q-1)-divisible),
//   (M; m_1..m_d) = (-1)^((d-1)(s-1)) sum' prod_i (q^{k_i}-1; i_1..i_d)  mod p,
// the restricted sum over s-tuples of 'even'-positive compositions of the
// q^{k_i}-1 that add up to (m_1..m_d) componentwise.
VerifyReport verify_remark5(uint32_t p, uint32_t e, int64_t d, int64_t s,
                            const std::vector<int64_t>& ks,
                            const std::vector<int64_t>& ms);

}  // namespace carlitz
