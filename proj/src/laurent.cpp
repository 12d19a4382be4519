#include "carlitz/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carlitz {

void LaurentSeries::normalize() {
  // drop stored coefficients at exponents >= prec
  if (prec_ < kValInf && !c_.empty()) {
    int64_t keep = prec_ - lead_;
    if (keep <= 0)
      c_.clear();
    else if (int64_t(c_.size()) > keep)
      c_.resize(size_t(keep));
  }
  // strip leading zeros, adjusting the valuation
  size_t skip = 0;
  while (skip < c_.size() && c_[skip].is_zero()) ++skip;
  if (skip) {
    c_.erase(c_.begin(), c_.begin() + skip);
    lead_ += int64_t(skip);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) lead_ = 0;
}

void LaurentSeries::check_same(const LaurentSeries& o) const {
  if (!ctx_ || !o.ctx_) throw std::domain_error("laurent series used before initialization");
  if (ctx_.get() != o.ctx_.get())
    throw std::domain_error("laurent arithmetic across distinct field contexts");
}

LaurentSeries LaurentSeries::zero(FieldCtxPtr ctx, int64_t prec) {
  LaurentSeries s;
  s.ctx_ = std::move(ctx);
  s.prec_ = prec;
  return s;
}

LaurentSeries LaurentSeries::one(const FieldCtxPtr& ctx) { return constant(ctx->one()); }

LaurentSeries LaurentSeries::constant(const Fq& c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::monomial(const Fq& c, int64_t exp) {
  if (!c.ctx()) throw std::domain_error("monomial: uninitialized element");
  LaurentSeries s;
  s.ctx_ = const_cast<FieldCtx*>(c.ctx())->shared_from_this();
  if (!c.is_zero()) {
    s.lead_ = exp;
    s.c_ = {c};
  }
  return s;
}

LaurentSeries LaurentSeries::of_poly(const Poly& p) {
  LaurentSeries s;
  s.ctx_ = p.field();
  if (!p.is_zero()) {
    s.lead_ = -p.deg();
    s.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
  }
  s.normalize();
  return s;
}

Fq LaurentSeries::coeff(int64_t exp) const {
  if (exp >= prec_)
    throw std::domain_error("laurent coefficient requested beyond tracked precision");
  if (c_.empty() || exp < lead_ || exp >= lead_ + int64_t(c_.size())) return ctx_->zero();
  return c_[size_t(exp - lead_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (Fq& x : r.c_) x = -x;
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  check_same(o);
  LaurentSeries r;
  r.ctx_ = ctx_;
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return r;
  int64_t lo = std::min(valuation(), o.valuation());
  int64_t hi = std::max(c_.empty() ? lo : lead_ + int64_t(c_.size()),
                        o.c_.empty() ? lo : o.lead_ + int64_t(o.c_.size()));
  if (r.prec_ < kValInf) hi = std::min(hi, r.prec_);
  if (hi <= lo) return r;
  r.lead_ = lo;
  r.c_.assign(size_t(hi - lo), ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    int64_t e = lead_ + int64_t(i);
    if (e >= lo && e < hi) r.c_[size_t(e - lo)] += c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    int64_t e = o.lead_ + int64_t(i);
    if (e >= lo && e < hi) r.c_[size_t(e - lo)] += o.c_[i];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  check_same(o);
  LaurentSeries r;
  r.ctx_ = ctx_;
  r.prec_ = std::min(sat_add(prec_, o.valuation()), sat_add(o.prec_, valuation()));
  if (c_.empty() || o.c_.empty()) return r;  // zero-to-prec
  r.lead_ = sat_add(lead_, o.lead_);
  if (r.lead_ >= r.prec_) return LaurentSeries::zero(ctx_, r.prec_);
  size_t out_len = c_.size() + o.c_.size() - 1;
  if (r.prec_ < kValInf)
    out_len = std::min<size_t>(out_len, size_t(std::max<int64_t>(0, r.prec_ - r.lead_)));
  r.c_.assign(out_len, ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    size_t jmax = std::min(o.c_.size(), out_len > i ? out_len - i : 0);
    for (size_t j = 0; j < jmax; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator*(const Fq& s) const {
  LaurentSeries r = *this;
  if (s.is_zero()) {
    r.c_.clear();
    r.lead_ = 0;
    return r;
  }
  for (Fq& x : r.c_) x = x * s;
  return r;
}

LaurentSeries LaurentSeries::inv(int64_t target) const {
  if (!ctx_) throw std::domain_error("laurent series used before initialization");
  if (c_.empty())
    throw std::domain_error("inversion of a series that is zero to its precision");
  int64_t v = lead_;
  int64_t trust = prec_ >= kValInf ? kValInf : sat_add(prec_, -2 * v);
  int64_t p = std::min(target, trust);
  if (p >= kValInf)
    throw std::invalid_argument("inv: exact series needs a finite precision target");
  LaurentSeries r;
  r.ctx_ = ctx_;
  r.prec_ = p;
  if (-v >= p) return r;  // inverse valuation already beyond precision
  size_t len = size_t(p - (-v));
  r.lead_ = -v;
  r.c_.assign(len, ctx_->zero());
  Fq s0inv = c_[0].inv();
  r.c_[0] = s0inv;
  for (size_t n = 1; n < len; ++n) {
    Fq acc = ctx_->zero();
    size_t imax = std::min(n, c_.size() - 1);
    for (size_t i = 1; i <= imax; ++i) acc += c_[i] * r.c_[n - i];
    r.c_[n] = -(s0inv * acc);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inv() const {
  if (prec_ >= kValInf)
    throw std::invalid_argument("inv: exact series needs a finite precision target");
  return inv(kValInf);
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const {
  check_same(o);
  int64_t target;
  if (o.prec_ < kValInf) {
    target = sat_add(o.prec_, -2 * o.valuation());
  } else if (prec_ < kValInf) {
    target = sat_add(sat_add(prec_, -o.valuation()), -valuation());
  } else {
    throw std::invalid_argument("laurent division of two exact series: use RatFunc");
  }
  return *this * o.inv(target);
}

LaurentSeries LaurentSeries::pow(int64_t n) const {
  if (n < 0) return inv().pow(-n);
  LaurentSeries acc = one(ctx_);
  LaurentSeries base = *this;
  uint64_t e = uint64_t(n);
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

LaurentSeries LaurentSeries::truncated(int64_t prec) const {
  LaurentSeries r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  check_same(o);
  if (prec_ != o.prec_ || c_.size() != o.c_.size()) return false;
  if (!c_.empty() && lead_ != o.lead_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

LaurentSeries::Agreement LaurentSeries::agrees_with(const LaurentSeries& o) const {
  check_same(o);
  Agreement a{true, 0, 0, 0};
  a.hi = std::min(prec_, o.prec_);
  a.lo = std::min(valuation(), o.valuation());
  if (a.lo >= a.hi) {
    a.lo = a.hi;
    return a;  // nothing comparable; trivially agrees on an empty window
  }
  for (int64_t e = a.lo; e < a.hi; ++e) {
    if (coeff(e) != o.coeff(e)) {
      a.ok = false;
      a.first_mismatch = e;
      return a;
    }
  }
  return a;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  if (c_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      int64_t e = lead_ + int64_t(i);
      if (e == 0) {
        os << c_[i].to_string();
      } else {
        if (!c_[i].is_one() || ctx_->degree() > 1) os << c_[i].to_string() << '*';
        os << "u^" << e;
      }
    }
  }
  if (prec_ < kValInf) os << " + O(u^" << prec_ << ")";
  return os.str();
}

LaurentSeries laurent_expand(const RatFunc& r, int64_t prec) {
  if (r.is_zero()) return LaurentSeries::zero(r.field(), prec);
  LaurentSeries num = LaurentSeries::of_poly(r.num());
  LaurentSeries den = LaurentSeries::of_poly(r.den());
  // product precision = min(inf + v_inv, inv_prec + v_num); aim it at `prec`
  int64_t inv_target = sat_add(prec, -num.valuation());
  LaurentSeries out = num * den.inv(inv_target);
  return out.truncated(prec);
}

}  // namespace carlitz
