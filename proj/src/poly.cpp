#include "carlitz/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace carlitz {

// ---------------------------------------------------------------------------
// Poly

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!ctx_ || !o.ctx_) throw std::domain_error("polynomial used before initialization");
  if (ctx_.get() != o.ctx_.get())
    throw std::domain_error("polynomial arithmetic across distinct field contexts");
}

Poly Poly::one(const FieldCtxPtr& ctx) { return constant(ctx->one()); }

Poly Poly::t(const FieldCtxPtr& ctx) {
  Poly r(ctx);
  r.c_ = {ctx->zero(), ctx->one()};
  return r;
}

Poly Poly::constant(const Fq& c) {
  if (!c.ctx()) throw std::domain_error("constant: uninitialized element");
  Poly r(const_cast<FieldCtx*>(c.ctx())->shared_from_this());
  if (!c.is_zero()) r.c_ = {c};
  return r;
}

Poly Poly::from_coeffs(FieldCtxPtr ctx, std::vector<Fq> coeffs) {
  Poly r(std::move(ctx));
  for (const Fq& c : coeffs)
    if (c.ctx() != r.ctx_.get())
      throw std::domain_error("from_coeffs: coefficient from a different context");
  r.c_ = std::move(coeffs);
  r.trim();
  return r;
}

Poly Poly::from_ints(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs) {
  std::vector<Fq> v;
  v.reserve(coeffs.size());
  for (int64_t c : coeffs) v.push_back(ctx->from_int(c));
  return from_coeffs(ctx, std::move(v));
}

Fq Poly::coeff(int64_t i) const {
  if (i < 0 || size_t(i) >= c_.size()) return ctx_->zero();
  return c_[size_t(i)];
}

const Fq& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("lead: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Fq& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  const Poly& big = c_.size() >= o.c_.size() ? *this : o;
  const Poly& small = c_.size() >= o.c_.size() ? o : *this;
  Poly r = big;
  for (size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(ctx_);
  Poly r(ctx_);
  size_t n = c_.size(), m = o.c_.size();
  const FieldCtx* ctx = ctx_.get();
  if (ctx->degree() == 1) {
    // prime field fast path: accumulate in uint64, reduce once per output
    uint64_t p = ctx->characteristic();
    std::vector<uint64_t> acc(n + m - 1, 0);
    // (2^16)^2 * len stays far below 2^63 for every supported size, but cap
    // the accumulation window defensively for very long operands
    size_t flush = size_t(1) << 30;
    size_t since = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t a = c_[i].coord(0);
      if (!a) continue;
      for (size_t j = 0; j < m; ++j) acc[i + j] += a * o.c_[j].coord(0);
      if (++since == flush) {
        for (auto& v : acc) v %= p;
        since = 0;
      }
    }
    r.c_.reserve(acc.size());
    for (uint64_t v : acc) r.c_.push_back(ctx->from_int(int64_t(v % p)));
  } else {
    r.c_.assign(n + m - 1, ctx->zero());
    for (size_t i = 0; i < n; ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Fq& s) const {
  Poly r = *this;
  if (s.is_zero()) return Poly(ctx_);
  for (Fq& x : r.c_) x = x * s;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same(o);
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& den) const {
  check_same(den);
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  Poly q(ctx_), r = *this;
  if (deg() < den.deg()) return {q, r};
  q.c_.assign(size_t(deg() - den.deg()) + 1, ctx_->zero());
  Fq dinv = den.lead().inv();
  while (!r.is_zero() && r.deg() >= den.deg()) {
    int64_t shift = r.deg() - den.deg();
    Fq c = r.lead() * dinv;
    q.c_[size_t(shift)] = c;
    // r -= c * t^shift * den
    for (size_t j = 0; j < den.c_.size(); ++j)
      r.c_[size_t(shift) + j] -= c * den.c_[j];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::pow(int64_t n) const {
  if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc = one(ctx_);
  Poly base = *this;
  uint64_t e = uint64_t(n);
  while (e) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  return *this * lead().inv();
}

Poly Poly::shifted(int64_t k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero()) return *this;
  Poly r(ctx_);
  r.c_.assign(size_t(k), ctx_->zero());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Fq Poly::eval(const Fq& x) const {
  Fq acc = ctx_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  Poly r(ctx_);
  if (c_.size() < 2) return r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * ctx_->from_int(int64_t(i)));
  r.trim();
  return r;
}

bool Poly::less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (size_t i = a.c_.size(); i-- > 0;) {
    uint64_t ia = a.ctx_->index_of(a.c_[i]);
    uint64_t ib = b.ctx_->index_of(b.c_[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  bool ext = ctx_->degree() > 1;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << '+';
    first = false;
    bool unit = c_[i].is_one();
    if (i == 0) {
      os << c_[i].to_string();
    } else {
      if (!unit || ext) os << c_[i].to_string() << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(den_.field());
    num_ = Poly::zero(den_.field());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Fq scale = den_.lead().inv();
  num_ = num_ * scale;
  den_ = den_ * scale;
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)) { den_ = Poly::one(num_.field()); }

RatFunc RatFunc::zero(const FieldCtxPtr& ctx) { return RatFunc(Poly::zero(ctx)); }
RatFunc RatFunc::one(const FieldCtxPtr& ctx) { return RatFunc(Poly::one(ctx)); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Poly g = gcd(den_, o.den_);
  Poly da = den_ / g, db = o.den_ / g;
  Poly num = num_ * db + o.num_ * da;
  Poly den = da * o.den_;
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero(num_.field());
  // cross-cancel before multiplying to keep intermediates reduced
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.deg() > 0 ? num_ / g1 : num_;
  Poly d2 = g1.deg() > 0 ? o.den_ / g1 : o.den_;
  Poly n2 = g2.deg() > 0 ? o.num_ / g2 : o.num_;
  Poly d1 = g2.deg() > 0 ? den_ / g2 : den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inversion of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(int64_t n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc acc = one(num_.field());
  RatFunc base = *this;
  uint64_t e = uint64_t(n);
  while (e) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// factorization and enumeration

void for_each_monic(const FieldCtxPtr& ctx, int64_t d,
                    const std::function<void(const Poly&)>& fn) {
  if (d < 0) throw std::invalid_argument("for_each_monic: negative degree");
  uint64_t q = ctx->size();
  uint64_t total = 1;
  for (int64_t i = 0; i < d; ++i) {
    if (total > (uint64_t(1) << 40) / q)
      throw std::invalid_argument("for_each_monic: q^d too large");
    total *= q;
  }
  std::vector<Fq> coeffs(size_t(d) + 1, ctx->zero());
  coeffs[size_t(d)] = ctx->one();
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (int64_t i = 0; i < d; ++i) {
      coeffs[size_t(i)] = ctx->element(v % q);
      v /= q;
    }
    fn(Poly::from_coeffs(ctx, coeffs));
  }
}

std::vector<Poly> monic_polys(const FieldCtxPtr& ctx, int64_t d) {
  std::vector<Poly> out;
  for_each_monic(ctx, d, [&](const Poly& p) { out.push_back(p); });
  return out;
}

const std::vector<Poly>& irreducibles(const FieldCtxPtr& ctx, int64_t deg) {
  struct Key {
    const FieldCtx* ctx;
    int64_t deg;
    bool operator<(const Key& o) const {
      return std::tie(ctx, deg) < std::tie(o.ctx, o.deg);
    }
  };
  static std::map<Key, std::vector<Poly>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  if (deg < 1) {
    static const std::vector<Poly> empty;
    return empty;
  }
  // build upward so each degree only consults already-cached smaller ones
  for (int64_t d = 1; d <= deg; ++d) {
    Key key{ctx.get(), d};
    if (cache.count(key)) continue;
    std::vector<Poly> out;
    for_each_monic(ctx, d, [&](const Poly& f) {
      for (int64_t dd = 1; dd <= d / 2; ++dd)
        for (const Poly& p : cache.at(Key{ctx.get(), dd}))
          if ((f % p).is_zero()) return;
      out.push_back(f);
    });
    cache.emplace(key, std::move(out));
  }
  return cache.at(Key{ctx.get(), deg});
}

FactorMap factor_trial(const Poly& f, int64_t max_deg) {
  if (f.is_zero()) throw std::invalid_argument("factor_trial: zero polynomial");
  FactorMap fm;
  fm.unit = f.lead();
  Poly rest = f.monic();
  for (int64_t d = 1; d <= max_deg && rest.deg() > 0; ++d) {
    if (d > rest.deg()) break;
    for (const Poly& p : irreducibles(f.field(), d)) {
      int64_t mult = 0;
      for (;;) {
        auto [q, r] = rest.divrem(p);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult) fm.factors[p] = mult;
      if (rest.deg() < d) break;
    }
  }
  if (rest.deg() > 0) {
    fm.residual = rest;
    fm.complete = false;
  }
  return fm;
}

Poly FactorMap::product() const {
  Poly r = Poly::constant(unit);
  for (const auto& [p, m] : factors) r *= p.pow(m);
  if (residual) r *= *residual;
  return r;
}

}  // namespace carlitz
