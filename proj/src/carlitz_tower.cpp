#include "carlitz/carlitz_tower.hpp"

#include <stdexcept>

namespace carlitz {

CarlitzCtx::CarlitzCtx(FieldCtxPtr base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("CarlitzCtx: null base field");
  bigd_ = {Poly::one(base_)};
  bigl_ = {Poly::one(base_)};
}

Poly CarlitzCtx::bracket(int64_t n) {
  if (n < 1) throw std::invalid_argument("bracket: n must be >= 1");
  std::lock_guard<std::mutex> lk(mu_);
  while (int64_t(brackets_.size()) < n) {
    int64_t k = int64_t(brackets_.size()) + 1;
    int64_t qk = ipow(int64_t(q()), k);
    brackets_.push_back(Poly::t(base_).shifted(qk - 1) - Poly::t(base_));
  }
  return brackets_[size_t(n - 1)];
}

Poly CarlitzCtx::bigD(int64_t m) {
  if (m < 0) throw std::invalid_argument("bigD: m must be >= 0");
  bracket(std::max<int64_t>(m, 1));  // warm the bracket cache
  std::lock_guard<std::mutex> lk(mu_);
  while (int64_t(bigd_.size()) <= m) {
    // D_k = [k] * D_{k-1}^q
    int64_t k = int64_t(bigd_.size());
    bigd_.push_back(brackets_[size_t(k - 1)] * bigd_.back().pow(int64_t(q())));
  }
  return bigd_[size_t(m)];
}

Poly CarlitzCtx::bigL(int64_t n) {
  if (n < 0) throw std::invalid_argument("bigL: n must be >= 0");
  bracket(std::max<int64_t>(n, 1));
  std::lock_guard<std::mutex> lk(mu_);
  while (int64_t(bigl_.size()) <= n) {
    int64_t k = int64_t(bigl_.size());
    bigl_.push_back(bigl_.back() * brackets_[size_t(k - 1)]);
  }
  return bigl_[size_t(n)];
}

Poly CarlitzCtx::ell(int64_t n) {
  Poly L = bigL(n);
  return n % 2 ? L * base_->from_int(-1) : L;
}

LinearSeries<RatFunc> CarlitzCtx::exp_series(int64_t order) {
  if (order < 0) throw std::invalid_argument("exp_series: negative order");
  std::vector<RatFunc> c;
  c.reserve(size_t(order) + 1);
  for (int64_t i = 0; i <= order; ++i) c.emplace_back(Poly::one(base_), bigD(i));
  return LinearSeries<RatFunc>::truncated(q(), std::move(c));
}

LinearSeries<RatFunc> CarlitzCtx::log_series(int64_t order) {
  if (order < 0) throw std::invalid_argument("log_series: negative order");
  std::vector<RatFunc> c;
  c.reserve(size_t(order) + 1);
  for (int64_t i = 0; i <= order; ++i) c.emplace_back(Poly::one(base_), ell(i));
  return LinearSeries<RatFunc>::truncated(q(), std::move(c));
}

Poly CarlitzCtx::factorial(int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Poly r = Poly::one(base_);
  int64_t qq = int64_t(q());
  for (int64_t i = 0; n > 0; ++i, n /= qq) {
    int64_t digit = n % qq;
    if (digit) r *= bigD(i).pow(digit);
  }
  return r;
}

LinearSeries<RatFunc> CarlitzCtx::binomial(int64_t d) {
  if (d < 0) throw std::invalid_argument("binomial: d must be >= 0");
  std::vector<RatFunc> c;
  c.reserve(size_t(d) + 1);
  for (int64_t i = 0; i <= d; ++i) {
    int64_t qi = ipow(int64_t(q()), i);
    Poly den = bigD(i) * ell(d - i).pow(qi);
    c.emplace_back(Poly::one(base_), den);
  }
  auto f = LinearSeries<RatFunc>::polynomial(q(), std::move(c));

  if (d <= 2 && q() <= 3) {
    // D_d * f must equal prod_{deg a < d} (z - a); expand the product over
    // the enumerated polynomials and compare coefficientwise.
    std::vector<Poly> prod = {Poly::one(base_)};  // coefficients in z
    for (int64_t deg = -1; deg < d; ++deg) {
      auto mults = deg < 0 ? std::vector<Poly>{Poly::zero(base_)}
                           : monic_polys(base_, deg);
      std::vector<Poly> all;
      if (deg < 0) {
        all = mults;  // just a = 0
      } else {
        // every polynomial of degree `deg`: unit * monic
        for (uint64_t u = 1; u < q(); ++u)
          for (const Poly& m : mults) all.push_back(m * base_->element(u));
      }
      for (const Poly& a : all) {
        std::vector<Poly> next(prod.size() + 1, Poly::zero(base_));
        for (size_t i = 0; i < prod.size(); ++i) {
          next[i + 1] += prod[i];
          next[i] -= prod[i] * a;
        }
        prod = std::move(next);
      }
    }
    RatFunc Dd{bigD(d)};
    for (size_t z_exp = 0; z_exp < prod.size(); ++z_exp) {
      // nonzero only at z^(q^i)
      RatFunc expect = RatFunc::zero(base_);
      for (int64_t i = 0; i <= d; ++i)
        if (int64_t(z_exp) == ipow(int64_t(q()), i)) expect = Dd * f.coeffs()[size_t(i)];
      if (RatFunc(prod[z_exp]) != expect)
        throw std::logic_error("carlitz_binomial: sum form disagrees with product form");
    }
  }
  return f;
}

BernoulliEntry CarlitzCtx::bernoulli(int64_t n, int64_t order, int64_t factor_max_deg) {
  if (n < 0) throw std::invalid_argument("bernoulli: n must be >= 0");
  if (order < n) throw std::invalid_argument("bernoulli: order must be >= n");
  // reciprocal of e(z)/z = sum_i z^(q^i - 1)/d_i  (coefficient 1 at z^0)
  std::vector<RatFunc> r;
  r.reserve(size_t(n) + 1);
  r.push_back(RatFunc::one(base_));
  std::vector<std::pair<int64_t, RatFunc>> support;  // (q^i - 1, 1/d_i), i >= 1
  for (int64_t i = 1; ipow(int64_t(q()), i) - 1 <= n; ++i)
    support.emplace_back(ipow(int64_t(q()), i) - 1, RatFunc(Poly::one(base_), bigD(i)));
  for (int64_t m = 1; m <= n; ++m) {
    RatFunc acc = RatFunc::zero(base_);
    for (const auto& [j, cj] : support) {
      if (j > m) break;
      const RatFunc& prev = r[size_t(m - j)];
      if (prev.is_zero()) continue;
      acc += cj * prev;
    }
    r.push_back(-acc);
  }

  BernoulliEntry entry;
  entry.n = n;
  entry.value = RatFunc(factorial(n)) * r[size_t(n)];
  if (!entry.value.is_zero()) {
    entry.num_factors = factor_trial(entry.value.num(), factor_max_deg);
    entry.den_factors = factor_trial(entry.value.den(), factor_max_deg);
  } else {
    entry.num_factors.unit = base_->zero();
    entry.den_factors.unit = base_->one();
  }
  return entry;
}

RatFunc CarlitzCtx::bernoulli_qk_closed(int64_t k) {
  if (k < 1) throw std::invalid_argument("bernoulli_qk_closed: k must be >= 1");
  Poly num = Poly::one(base_);
  for (int64_t i = 1; i <= k - 1; ++i)
    num *= bracket(k - i).pow(ipow(int64_t(q()), i) - 2);
  if (k % 2) num = num * base_->from_int(-1);
  return RatFunc(num, bracket(k));
}

}  // namespace carlitz
