#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/laurent.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/report.hpp"

namespace carlitz {

// Uniform element operations over the three coefficient fields the engines
// are instantiated at: F_{q^m} (Fq), F_q(t) (RatFunc), and truncated
// F_q((1/t)) (LaurentSeries).

inline Fq zero_like(const Fq& x) { return x.ctx()->zero(); }
inline Fq one_like(const Fq& x) { return x.ctx()->one(); }
inline bool elem_is_zero(const Fq& x) { return x.is_zero(); }
inline Fq elem_inv(const Fq& x) { return x.inv(); }
inline Fq elem_pow(const Fq& x, int64_t n) { return x.pow(n); }
inline bool elem_equal(const Fq& a, const Fq& b) { return a == b; }
inline uint32_t elem_characteristic(const Fq& x) { return x.ctx()->characteristic(); }
inline std::string elem_str(const Fq& x) { return x.to_string(); }

inline RatFunc zero_like(const RatFunc& x) { return RatFunc::zero(x.field()); }
inline RatFunc one_like(const RatFunc& x) { return RatFunc::one(x.field()); }
inline bool elem_is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc elem_inv(const RatFunc& x) { return x.inv(); }
inline RatFunc elem_pow(const RatFunc& x, int64_t n) { return x.pow(n); }
inline bool elem_equal(const RatFunc& a, const RatFunc& b) { return a == b; }
inline uint32_t elem_characteristic(const RatFunc& x) {
  return x.field()->characteristic();
}
inline std::string elem_str(const RatFunc& x) { return x.to_string(); }

// exact zero/one: identities under the min-precision propagation rules
inline LaurentSeries zero_like(const LaurentSeries& x) {
  return LaurentSeries::zero(x.field(), kValInf);
}
inline LaurentSeries one_like(const LaurentSeries& x) {
  return LaurentSeries::one(x.field());
}
inline bool elem_is_zero(const LaurentSeries& x) { return x.is_zero_to_prec(); }
inline LaurentSeries elem_inv(const LaurentSeries& x) { return x.inv(); }
inline LaurentSeries elem_pow(const LaurentSeries& x, int64_t n) { return x.pow(n); }
inline bool elem_equal(const LaurentSeries& a, const LaurentSeries& b) {
  return a.agrees_with(b).ok;
}
inline uint32_t elem_characteristic(const LaurentSeries& x) {
  return x.field()->characteristic();
}
inline std::string elem_str(const LaurentSeries& x) { return x.to_string(); }

enum class SeriesKind { Polynomial, Truncated };

/*
 * LinearSeries — an F_q-linear series sum f_i z^(q^i) with coefficients in a
 * field containing F_q. `q` is the linearity base, carried explicitly since
 * the coefficient field may be a proper extension. Polynomial kind means the
 * stored coefficients are all of f and the top one is nonzero (degree q^d);
 * truncated kind means coefficients are known through index size()-1 only.
 */
template <class T>
class LinearSeries {
 public:
  static LinearSeries polynomial(uint64_t q, std::vector<T> coeffs) {
    if (coeffs.empty() || elem_is_zero(coeffs.back()))
      throw std::invalid_argument("linear polynomial needs a nonzero top coefficient");
    return LinearSeries(q, SeriesKind::Polynomial, std::move(coeffs));
  }
  static LinearSeries truncated(uint64_t q, std::vector<T> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty linear series");
    return LinearSeries(q, SeriesKind::Truncated, std::move(coeffs));
  }

  uint64_t q() const { return q_; }
  SeriesKind kind() const { return kind_; }
  bool is_polynomial() const { return kind_ == SeriesKind::Polynomial; }
  int64_t degree_exp() const {  // d with deg f = q^d
    if (!is_polynomial()) throw std::invalid_argument("degree of a truncated series");
    return int64_t(c_.size()) - 1;
  }
  size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int64_t i) const {  // zero beyond the top of a polynomial
    if (i < 0 || size_t(i) >= c_.size()) return zero_like(c_[0]);
    return c_[size_t(i)];
  }

 private:
  LinearSeries(uint64_t q, SeriesKind kind, std::vector<T> coeffs)
      : q_(q), kind_(kind), c_(std::move(coeffs)) {
    if (q_ < 2) throw std::invalid_argument("linearity base must be >= 2");
  }

  uint64_t q_;
  SeriesKind kind_;
  std::vector<T> c_;
};

enum class Family { h, a, H, alpha };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::h: return "h";
    case Family::a: return "a";
    case Family::H: return "H";
    case Family::alpha: return "alpha";
  }
  return "?";
}

/*
 * CoeffTable — a complete prefix c_0..c_N of one coefficient family. For the
 * h family of a series with f_0 = 0, `degenerate_zero` marks the identically
 * zero table.
 */
template <class T>
struct CoeffTable {
  Family family;
  uint64_t q = 0;
  int64_t n_max = -1;
  std::vector<T> v;
  bool degenerate_zero = false;
  std::string source;  // label for reports

  const T& at(int64_t i) const {
    if (i < 0 || i > n_max)
      throw std::out_of_range("coefficient table bound N too small for requested index");
    return v[size_t(i)];
  }
};

namespace detail {

template <class T>
void require_order(const LinearSeries<T>& f, int64_t max_index, const char* what) {
  if (f.kind() != SeriesKind::Truncated) return;
  // indices up to max_index consume f_i for q^i <= max_index; the truncation
  // must already contain all of them
  int64_t qpow = 1;
  for (size_t i = 0; i < f.size(); ++i) {
    if (qpow > max_index) return;
    qpow = sat_mul(qpow, int64_t(f.q()));
  }
  if (qpow <= max_index)
    throw std::invalid_argument(std::string(what) +
                                ": truncation order too small for requested bound");
}

}  // namespace detail

// evaluation of an F_q-linear polynomial over a finite field
inline Fq ls_eval(const LinearSeries<Fq>& f, const Fq& x) {
  Fq acc = zero_like(x);
  Fq xp = x;
  for (size_t i = 0; i < f.size(); ++i) {
    acc += f.coeffs()[i] * xp;
    if (i + 1 < f.size()) xp = xp.pow(int64_t(f.q()));
  }
  return acc;
}

// (f o g)_n = sum_{i+j=n} f_i g_j^(q^i), through index `order`
template <class T>
LinearSeries<T> compose(const LinearSeries<T>& f, const LinearSeries<T>& g,
                        int64_t order) {
  if (f.q() != g.q()) throw std::invalid_argument("compose: mismatched linearity bases");
  if (order < 0) throw std::invalid_argument("compose: negative order");
  if (f.kind() == SeriesKind::Truncated && int64_t(f.size()) <= order)
    throw std::invalid_argument("compose: f truncated below requested order");
  if (g.kind() == SeriesKind::Truncated && int64_t(g.size()) <= order)
    throw std::invalid_argument("compose: g truncated below requested order");
  std::vector<T> out;
  out.reserve(size_t(order) + 1);
  for (int64_t n = 0; n <= order; ++n) {
    T acc = zero_like(f.coeffs()[0]);
    for (int64_t i = 0; i <= n; ++i) {
      T fi = f.coeff(i);
      if (elem_is_zero(fi)) continue;
      T gj = g.coeff(n - i);
      if (elem_is_zero(gj)) continue;
      acc = acc + fi * elem_pow(gj, ipow(int64_t(f.q()), i));
    }
    out.push_back(acc);
  }
  return LinearSeries<T>::truncated(f.q(), std::move(out));
}

// g with f(g(z)) = z = g(f(z)) through the given order; requires f_0
// invertible. g_0 = f_0^-1, g_n = -f_0^-1 sum_{i=1..n} f_i g_{n-i}^(q^i).
template <class T>
LinearSeries<T> comp_inverse(const LinearSeries<T>& f, int64_t order) {
  if (order < 0) throw std::invalid_argument("comp_inverse: negative order");
  if (f.kind() == SeriesKind::Truncated && int64_t(f.size()) <= order)
    throw std::invalid_argument("comp_inverse: f truncated below requested order");
  T f0 = f.coeffs()[0];
  if (elem_is_zero(f0)) throw std::domain_error("comp_inverse: f_0 = 0 is not invertible");
  T f0inv = elem_inv(f0);
  std::vector<T> g;
  g.reserve(size_t(order) + 1);
  g.push_back(f0inv);
  for (int64_t n = 1; n <= order; ++n) {
    T acc = zero_like(f0);
    for (int64_t i = 1; i <= n; ++i) {
      T fi = f.coeff(i);
      if (elem_is_zero(fi)) continue;
      acc = acc + fi * elem_pow(g[size_t(n - i)], ipow(int64_t(f.q()), i));
    }
    g.push_back(-(f0inv * acc));
  }
  return LinearSeries<T>::truncated(f.q(), std::move(g));
}

/*
 * h(z) = z f'(z)/f(z) = z f_0 / f(z), h_0 = 1, with the recursion obtained
 * from h*f = f_0*z:  h_{m-1} = -f_0^{-1} sum_{i>=1} h_{m-q^i} f_i.
 * f_0 = 0 yields the identically zero table, flagged, not an error.
 */
template <class T>
CoeffTable<T> h_table(const LinearSeries<T>& f, int64_t N) {
  if (N < 0) throw std::invalid_argument("h_table: negative bound");
  detail::require_order(f, N + 1, "h_table");
  CoeffTable<T> tab;
  tab.family = Family::h;
  tab.q = f.q();
  tab.n_max = N;
  T f0 = f.coeffs()[0];
  if (elem_is_zero(f0)) {
    tab.v.assign(size_t(N) + 1, zero_like(f0));
    tab.degenerate_zero = true;
    return tab;
  }
  T f0inv = elem_inv(f0);
  tab.v.reserve(size_t(N) + 1);
  tab.v.push_back(one_like(f0));
  for (int64_t m = 2; m <= N + 1; ++m) {
    T acc = zero_like(f0);
    int64_t qi = int64_t(f.q());
    for (int64_t i = 1; qi <= m; ++i, qi = sat_mul(qi, int64_t(f.q()))) {
      T fi = f.coeff(i);
      if (elem_is_zero(fi)) continue;
      const T& h = tab.v[size_t(m - qi)];
      if (elem_is_zero(h)) continue;
      acc = acc + h * fi;
    }
    tab.v.push_back(-(f0inv * acc));
  }
  return tab;
}

/*
 * a(z) = z f'(z)/(1 - f(z)); a_0 = 0, a_1 = f_0, and from a - a*f = f_0*z:
 * a_m = f_0 a_{m-1} + sum_{i>=1} a_{m-q^i} f_i.
 */
template <class T>
CoeffTable<T> a_table(const LinearSeries<T>& f, int64_t N) {
  if (N < 0) throw std::invalid_argument("a_table: negative bound");
  detail::require_order(f, N, "a_table");
  CoeffTable<T> tab;
  tab.family = Family::a;
  tab.q = f.q();
  tab.n_max = N;
  T f0 = f.coeffs()[0];
  tab.v.reserve(size_t(N) + 1);
  tab.v.push_back(zero_like(f0));
  if (N >= 1) tab.v.push_back(f0);
  for (int64_t m = 2; m <= N; ++m) {
    T acc = f0 * tab.v[size_t(m - 1)];
    int64_t qi = int64_t(f.q());
    for (int64_t i = 1; qi <= m; ++i, qi = sat_mul(qi, int64_t(f.q()))) {
      T fi = f.coeff(i);
      if (elem_is_zero(fi)) continue;
      const T& a = tab.v[size_t(m - qi)];
      if (elem_is_zero(a)) continue;
      acc = acc + a * fi;
    }
    tab.v.push_back(acc);
  }
  return tab;
}

/*
 * H_m: coefficients of -h(z) expanded in u = 1/z for a polynomial f of
 * degree q^d. Zero below q^d - 1, then
 *   f_d H_m = -delta_{q^d-1,m} f_0 - sum_{j<d} f_j H_{m-q^d+q^j}.
 */
template <class T>
CoeffTable<T> H_table(const LinearSeries<T>& f, int64_t N) {
  if (N < 0) throw std::invalid_argument("H_table: negative bound");
  if (!f.is_polynomial())
    throw std::invalid_argument("H_table: u-expansion needs a polynomial f");
  CoeffTable<T> tab;
  tab.family = Family::H;
  tab.q = f.q();
  tab.n_max = N;
  int64_t d = f.degree_exp();
  int64_t qd = ipow(int64_t(f.q()), d);
  T fdinv = elem_inv(f.coeffs()[size_t(d)]);
  T zero = zero_like(f.coeffs()[0]);
  tab.v.assign(size_t(N) + 1, zero);
  for (int64_t m = qd - 1; m <= N; ++m) {
    T acc = m == qd - 1 ? f.coeffs()[0] : zero;
    int64_t qj = 1;
    for (int64_t j = 0; j < d; ++j, qj *= int64_t(f.q())) {
      const T& fj = f.coeffs()[size_t(j)];
      if (elem_is_zero(fj)) continue;
      const T& prev = tab.v[size_t(m - qd + qj)];
      if (elem_is_zero(prev)) continue;
      acc = acc + fj * prev;
    }
    tab.v[size_t(m)] = -(fdinv * acc);
  }
  return tab;
}

/*
 * alpha_m: coefficients of -a(z) in u = 1/z for a polynomial f. Zero below
 * q^d - 1, then
 *   f_d alpha_m = delta_{q^d-1,m} f_0 + alpha_{m-q^d} - sum_{j<d} f_j alpha_{m-q^d+q^j}.
 */
template <class T>
CoeffTable<T> alpha_table(const LinearSeries<T>& f, int64_t N) {
  if (N < 0) throw std::invalid_argument("alpha_table: negative bound");
  if (!f.is_polynomial())
    throw std::invalid_argument("alpha_table: u-expansion needs a polynomial f");
  CoeffTable<T> tab;
  tab.family = Family::alpha;
  tab.q = f.q();
  tab.n_max = N;
  int64_t d = f.degree_exp();
  int64_t qd = ipow(int64_t(f.q()), d);
  T fdinv = elem_inv(f.coeffs()[size_t(d)]);
  T zero = zero_like(f.coeffs()[0]);
  tab.v.assign(size_t(N) + 1, zero);
  for (int64_t m = qd - 1; m <= N; ++m) {
    T acc = m == qd - 1 ? f.coeffs()[0] : zero;
    if (m - qd >= 0) acc = acc + tab.v[size_t(m - qd)];
    int64_t qj = 1;
    for (int64_t j = 0; j < d; ++j, qj *= int64_t(f.q())) {
      const T& fj = f.coeffs()[size_t(j)];
      if (elem_is_zero(fj)) continue;
      const T& prev = tab.v[size_t(m - qd + qj)];
      if (elem_is_zero(prev)) continue;
      acc = acc - fj * prev;
    }
    tab.v[size_t(m)] = fdinv * acc;
  }
  return tab;
}

/*
 * The monic F_q-linear polynomial whose root set is the span of `basis`
 * (dimension d => degree q^d), built by successive quotients:
 * V -> V + F_q b multiplies f into f^q - f(b)^(q-1) f. Linear dependence
 * surfaces as f(b) = 0 and is rejected. With `shift` mu, the result is
 * scaled so that { v : f(v) = 1 } = mu + span(basis).
 */
inline LinearSeries<Fq> from_root_space(const std::vector<Fq>& basis,
                                        const std::optional<Fq>& shift = {}) {
  if (basis.empty()) throw std::invalid_argument("from_root_space: empty basis");
  const FieldCtx* ctx = basis[0].ctx();
  int64_t q = int64_t(ctx->linearity_base());
  std::vector<Fq> c = {ctx->one()};  // f = z
  for (const Fq& b : basis) {
    Fq beta = ls_eval(LinearSeries<Fq>::polynomial(uint64_t(q), c), b);
    if (beta.is_zero())
      throw std::invalid_argument("from_root_space: basis is F_q-linearly dependent");
    Fq scale = beta.pow(q - 1);
    std::vector<Fq> next(c.size() + 1, ctx->zero());
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i].pow(q);
      next[i] -= scale * c[i];
    }
    c = std::move(next);
  }
  auto f = LinearSeries<Fq>::polynomial(uint64_t(q), std::move(c));
  if (!shift) return f;
  Fq val = ls_eval(f, *shift);
  if (val.is_zero())
    throw std::invalid_argument("from_root_space: shift lies in the root space");
  Fq inv = val.inv();
  std::vector<Fq> scaled = f.coeffs();
  for (Fq& x : scaled) x = x * inv;
  return LinearSeries<Fq>::polynomial(uint64_t(q), std::move(scaled));
}

// c_{pm} = c_m^p at every applicable index; violations are data, not errors.
template <class T>
VerifyReport check_ppower(const CoeffTable<T>& tab) {
  VerifyReport rep;
  rep.id = "ppower";
  rep.add_param("family", family_name(tab.family));
  rep.add_param("N", std::to_string(tab.n_max));
  if (tab.v.empty()) {
    rep.status = VerifyReport::Status::Pass;
    return rep;
  }
  uint32_t p = elem_characteristic(tab.v[0]);
  rep.add_param("p", std::to_string(p));
  int64_t violations = 0;
  for (int64_t m = 0; m * int64_t(p) <= tab.n_max; ++m) {
    T expect = elem_pow(tab.at(m), p);
    const T& got = tab.at(m * p);
    if (!elem_equal(expect, got)) {
      if (violations == 0) {
        rep.witness = {elem_str(got), elem_str(expect)};
        rep.add_extra("first_violation_index", std::to_string(m * p));
      }
      ++violations;
    }
  }
  rep.add_extra("violations", std::to_string(violations));
  rep.status = violations ? VerifyReport::Status::Fail : VerifyReport::Status::Pass;
  return rep;
}

// Internal consistency: the vanishing patterns every table must satisfy.
// h/H vanish away from multiples of q-1; H/alpha from a degree-q^d
// polynomial vanish below q^d - 1.
template <class T>
void check_table_invariants(const CoeffTable<T>& tab, std::optional<int64_t> poly_d = {}) {
  uint64_t q = tab.q;
  for (int64_t i = 0; i <= tab.n_max; ++i) {
    bool must_vanish = false;
    if ((tab.family == Family::h || tab.family == Family::H) && q > 2 &&
        i % int64_t(q - 1) != 0)
      must_vanish = true;
    if ((tab.family == Family::H || tab.family == Family::alpha) && poly_d &&
        i < ipow(int64_t(q), *poly_d) - 1)
      must_vanish = true;
    if (must_vanish && !elem_is_zero(tab.at(i)))
      throw std::logic_error("coefficient table violates a vanishing invariant at index " +
                             std::to_string(i));
  }
}

}  // namespace carlitz
