#include "carlitz/fq.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace carlitz {

unsigned thread_cap() {
  static unsigned cap = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CARLITZ_LAB_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return std::min<unsigned>(hw, (unsigned)v);
    }
    return hw;
  }();
  return cap;
}

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- tiny polynomial arithmetic over Z/p, used only to validate moduli ----
// ascending coefficient vectors, normalized (no trailing zeros)

using ZpX = std::vector<uint32_t>;

void zp_trim(ZpX& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpX zp_mulmod(const ZpX& a, const ZpX& b, const ZpX& mod, uint32_t p) {
  ZpX r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  // reduce by monic mod
  size_t dm = mod.size() - 1;
  for (size_t i = r.size(); i-- > dm;) {
    uint32_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (size_t j = 0; j < dm; ++j)
      r[i - dm + j] = uint32_t((r[i - dm + j] + uint64_t(c) * (p - mod[j] % p)) % p);
  }
  r.resize(dm);
  zp_trim(r);
  return r;
}

ZpX zp_xpow_pk(const ZpX& mod, uint32_t p, uint64_t k, const ZpX& start) {
  // start^(p^k) mod `mod` by k rounds of p-th powering
  ZpX cur = start;
  for (uint64_t round = 0; round < k; ++round) {
    ZpX acc = {1};
    ZpX base = cur;
    uint32_t e = p;
    while (e) {
      if (e & 1) acc = zp_mulmod(acc, base, mod, p);
      base = zp_mulmod(base, base, mod, p);
      e >>= 1;
    }
    cur = acc;
  }
  return cur;
}

ZpX zp_gcd(ZpX a, ZpX b, uint32_t p) {
  auto inv_mod_p = [&](uint32_t x) {
    // extended Euclid in Z/p
    int64_t t = 0, newt = 1, r = p, newr = x;
    while (newr) {
      int64_t qq = r / newr;
      std::swap(t -= qq * newt, newt);
      std::swap(r -= qq * newr, newr);
    }
    return uint32_t((t % p + p) % p);
  };
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t binv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      uint32_t c = uint32_t((uint64_t(a.back()) * binv) % p);
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = uint32_t((a[shift + j] + uint64_t(c) * (p - b[j] % p)) % p);
      zp_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool zp_irreducible(const ZpX& f, uint32_t p) {
  // Rabin test: x^(p^e) == x (mod f) and gcd(x^(p^(e/r)) - x, f) = 1 for
  // every prime r | e.
  size_t e = f.size() - 1;
  if (e == 0) return false;
  ZpX x = {0, 1};
  if (e == 1) return true;
  ZpX xq = zp_xpow_pk(f, p, e, x);
  if (xq != x) return false;
  for (size_t r = 2; r <= e; ++r) {
    if (e % r || !is_prime(r)) continue;
    ZpX xr = zp_xpow_pk(f, p, e / r, x);
    // xr - x
    ZpX diff = xr;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i)
      diff[i] = uint32_t((diff[i] + p - x[i]) % p);
    zp_trim(diff);
    ZpX g = zp_gcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Built-in moduli (ascending coefficients, monic) for every prime power
// q = p^e <= 64 with e > 1.
const std::vector<uint16_t>* builtin_modulus(uint32_t p, uint32_t e) {
  static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint16_t>> table = {
      {{2, 2}, {1, 1, 1}},          // x^2+x+1
      {{2, 3}, {1, 1, 0, 1}},       // x^3+x+1
      {{2, 4}, {1, 1, 0, 0, 1}},    // x^4+x+1
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, // x^5+x^2+1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},          // x^2+1
      {{3, 3}, {1, 2, 0, 1}},       // x^3+2x+1
      {{5, 2}, {2, 0, 1}},          // x^2+2
      {{7, 2}, {1, 0, 1}},          // x^2+1
  };
  auto it = table.find({p, e});
  return it == table.end() ? nullptr : &it->second;
}

struct RegistryKey {
  uint32_t p, e;
  uint64_t sub_q;
  std::vector<uint16_t> modulus;
  bool operator<(const RegistryKey& o) const {
    return std::tie(p, e, sub_q, modulus) < std::tie(o.p, o.e, o.sub_q, o.modulus);
  }
};

std::mutex g_registry_mu;
std::map<RegistryKey, FieldCtxPtr>& registry() {
  static std::map<RegistryKey, FieldCtxPtr> r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtxPtr FieldCtx::make(uint32_t p, uint32_t e,
                           const std::vector<uint16_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field_make: p must be prime");
  if (e < 1) throw std::invalid_argument("field_make: e must be >= 1");
  if (e > kMaxFieldDegree) throw std::invalid_argument("field_make: degree too large");
  if (p > 65521) throw std::invalid_argument("field_make: characteristic too large");

  std::vector<uint16_t> mod = modulus;
  if (e == 1) {
    if (!mod.empty()) throw std::invalid_argument("field_make: prime field takes no modulus");
  } else {
    if (mod.empty()) {
      const auto* entry = builtin_modulus(p, e);
      if (!entry)
        throw std::invalid_argument(
            "field_make: no built-in modulus for this q; supply one explicitly");
      mod = *entry;
    }
    if (mod.size() != size_t(e) + 1 || mod.back() % p != 1)
      throw std::invalid_argument("field_make: modulus must be monic of degree e");
    ZpX f(mod.begin(), mod.end());
    for (auto& c : f) c %= p;
    if (!zp_irreducible(f, p))
      throw std::invalid_argument("field_make: modulus is reducible over F_p");
  }
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) q *= p;
  return intern(p, e, q, std::move(mod), nullptr, nullptr);
}

FieldCtxPtr FieldCtx::intern(uint32_t p, uint32_t e, uint64_t sub_q,
                             std::vector<uint16_t> modulus, const FieldCtx* base,
                             const std::array<uint16_t, kMaxFieldDegree>* root) {
  RegistryKey key{p, e, sub_q, modulus};
  std::lock_guard<std::mutex> lk(g_registry_mu);
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->e_ = e;
  ctx->q_ = 1;
  for (uint32_t i = 0; i < e; ++i) ctx->q_ *= p;
  ctx->sub_q_ = sub_q;
  ctx->modulus_ = std::move(modulus);
  ctx->base_ = base;
  if (root) ctx->root_ = *root;
  reg.emplace(std::move(key), ctx);
  return ctx;
}

FieldCtxPtr FieldCtx::extension(const FieldCtxPtr& base, uint32_t m) {
  if (!base) throw std::invalid_argument("extension: null base");
  if (m < 1) throw std::invalid_argument("extension: m must be >= 1");
  if (m == 1) return base;
  uint32_t p = base->p_;
  uint32_t e = base->e_ * m;
  if (e > kMaxFieldDegree) throw std::invalid_argument("extension: degree too large");

  std::vector<uint16_t> mod;
  if (const auto* entry = builtin_modulus(p, e)) {
    mod = *entry;
  } else {
    // deterministic search in element-index order
    ZpX f(e + 1, 0);
    f[e] = 1;
    uint64_t limit = 1;
    for (uint32_t i = 0; i < e; ++i) {
      if (limit > (uint64_t(1) << 40) / p)
        throw std::invalid_argument("extension: search space too large");
      limit *= p;
    }
    bool found = false;
    for (uint64_t idx = 0; idx < limit && !found; ++idx) {
      uint64_t v = idx;
      for (uint32_t i = 0; i < e; ++i) {
        f[i] = uint32_t(v % p);
        v /= p;
      }
      found = zp_irreducible(f, p);
    }
    if (!found) throw std::logic_error("extension: no irreducible found");
    mod.assign(f.begin(), f.end());
  }

  std::array<uint16_t, kMaxFieldDegree> root{};
  if (base->e_ > 1) {
    // Locate the embedding before interning: the image of the base generator
    // is a root of the base modulus in the extension. First root in element
    // index order; search runs in F_p[x]/(mod) directly.
    uint64_t q_ext = 1;
    for (uint32_t i = 0; i < e; ++i) q_ext *= p;
    if (q_ext > (uint64_t(1) << 20))
      throw std::invalid_argument("extension: embedding search space too large");
    ZpX extmod(mod.begin(), mod.end());
    bool found = false;
    for (uint64_t idx = 0; idx < q_ext && !found; ++idx) {
      ZpX cand;
      uint64_t v = idx;
      for (uint32_t i = 0; i < e; ++i) {
        cand.push_back(uint32_t(v % p));
        v /= p;
      }
      zp_trim(cand);
      ZpX acc;  // Horner over the base modulus coefficients
      for (size_t i = base->modulus_.size(); i-- > 0;) {
        acc = zp_mulmod(acc, cand, extmod, p);
        acc.resize(std::max<size_t>(acc.size(), 1), 0);
        acc[0] = uint32_t((acc[0] + base->modulus_[i]) % p);
        zp_trim(acc);
      }
      if (acc.empty()) {
        for (size_t i = 0; i < cand.size(); ++i) root[i] = uint16_t(cand[i]);
        found = true;
      }
    }
    if (!found) throw std::logic_error("extension: base modulus has no root in extension");
  }
  return intern(p, e, base->q_, mod, base.get(), &root);
}

Fq FieldCtx::zero() const {
  Fq x;
  x.ctx_ = this;
  return x;
}

Fq FieldCtx::one() const { return from_int(1); }

Fq FieldCtx::from_int(int64_t n) const {
  Fq x;
  x.ctx_ = this;
  int64_t r = n % int64_t(p_);
  if (r < 0) r += p_;
  x.rep_[0] = uint16_t(r);
  return x;
}

Fq FieldCtx::element(uint64_t index) const {
  if (index >= q_) throw std::invalid_argument("element: index out of range");
  Fq x;
  x.ctx_ = this;
  for (uint32_t i = 0; i < e_; ++i) {
    x.rep_[i] = uint16_t(index % p_);
    index /= p_;
  }
  return x;
}

uint64_t FieldCtx::index_of(const Fq& x) const {
  if (x.ctx() != this) throw std::domain_error("index_of: foreign element");
  uint64_t idx = 0;
  for (uint32_t i = e_; i-- > 0;) idx = idx * p_ + x.rep_[i];
  return idx;
}

Fq FieldCtx::generator() const {
  if (e_ < 2) throw std::invalid_argument("generator: prime field has no generator class");
  return element(p_);
}

Fq FieldCtx::random(SplitMix64& rng) const { return element(rng.below(q_)); }

Fq FieldCtx::embed(const Fq& base_element) const {
  if (base_element.ctx() == this) return base_element;
  if (!base_ || base_element.ctx() != base_)
    throw std::domain_error("embed: element does not belong to this context's base");
  if (base_->e_ == 1) return from_int(base_element.coord(0));
  Fq gamma;
  gamma.ctx_ = this;
  gamma.rep_ = root_;
  Fq acc = zero();
  for (unsigned i = base_->e_; i-- > 0;)
    acc = acc * gamma + from_int(base_element.coord(i));
  return acc;
}

std::string FieldCtx::to_string() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) os << " = F_" << p_ << "[x]/(modulus deg " << e_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Fq

void Fq::check_same(const Fq& o) const {
  if (ctx_ == nullptr || o.ctx_ == nullptr)
    throw std::domain_error("field element used before initialization");
  if (ctx_ != o.ctx_)
    throw std::domain_error("arithmetic between elements of distinct field contexts");
}

bool Fq::is_zero() const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  for (unsigned i = 0; i < ctx_->e_; ++i)
    if (rep_[i]) return false;
  return true;
}

bool Fq::is_one() const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  if (rep_[0] != 1) return false;
  for (unsigned i = 1; i < ctx_->e_; ++i)
    if (rep_[i]) return false;
  return true;
}

bool Fq::operator==(const Fq& o) const {
  check_same(o);
  for (unsigned i = 0; i < ctx_->e_; ++i)
    if (rep_[i] != o.rep_[i]) return false;
  return true;
}

Fq Fq::operator-() const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  Fq r = *this;
  uint32_t p = ctx_->p_;
  for (unsigned i = 0; i < ctx_->e_; ++i)
    r.rep_[i] = rep_[i] ? uint16_t(p - rep_[i]) : 0;
  return r;
}

Fq Fq::operator+(const Fq& o) const {
  check_same(o);
  Fq r = *this;
  uint32_t p = ctx_->p_;
  for (unsigned i = 0; i < ctx_->e_; ++i) {
    uint32_t s = uint32_t(rep_[i]) + o.rep_[i];
    r.rep_[i] = uint16_t(s >= p ? s - p : s);
  }
  return r;
}

Fq Fq::operator-(const Fq& o) const {
  check_same(o);
  Fq r = *this;
  uint32_t p = ctx_->p_;
  for (unsigned i = 0; i < ctx_->e_; ++i) {
    int32_t s = int32_t(rep_[i]) - int32_t(o.rep_[i]);
    r.rep_[i] = uint16_t(s < 0 ? s + int32_t(p) : s);
  }
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  check_same(o);
  const FieldCtx& c = *ctx_;
  uint32_t p = c.p_, e = c.e_;
  Fq r;
  r.ctx_ = ctx_;
  if (e == 1) {
    r.rep_[0] = uint16_t((uint64_t(rep_[0]) * o.rep_[0]) % p);
    return r;
  }
  uint64_t tmp[2 * kMaxFieldDegree] = {0};
  for (unsigned i = 0; i < e; ++i) {
    if (!rep_[i]) continue;
    for (unsigned j = 0; j < e; ++j)
      tmp[i + j] += uint64_t(rep_[i]) * o.rep_[j];
  }
  // reduce by the monic modulus: x^e = -(mod_0 + mod_1 x + ...)
  for (unsigned i = 2 * e - 1; i >= e; --i) {
    uint64_t cse = tmp[i] % p;
    if (cse) {
      uint64_t negc = p - cse;
      for (unsigned j = 0; j < e; ++j)
        tmp[i - e + j] += negc * (c.modulus_[j] % p);
    }
    tmp[i] = 0;
  }
  for (unsigned i = 0; i < e; ++i) r.rep_[i] = uint16_t(tmp[i] % p);
  return r;
}

Fq Fq::inv() const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  if (is_zero()) throw std::domain_error("inversion of zero field element");
  const FieldCtx& c = *ctx_;
  uint32_t p = c.p_;
  if (c.e_ == 1) {
    // extended Euclid in Z/p
    int64_t t = 0, newt = 1, r = p, newr = rep_[0];
    while (newr) {
      int64_t qq = r / newr;
      std::swap(t -= qq * newt, newt);
      std::swap(r -= qq * newr, newr);
    }
    Fq out;
    out.ctx_ = ctx_;
    out.rep_[0] = uint16_t((t % p + p) % p);
    return out;
  }
  // x^(q-2); q <= 2^24 here so the exponent is tiny
  return pow(int64_t(c.q_) - 2);
}

Fq Fq::pow(int64_t n) const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  if (n < 0) return inv().pow(-n);
  if (is_zero()) {
    if (n == 0) return ctx_->one();  // 0^0 = 1 convention (empty product)
    return *this;
  }
  // reduce mod group order
  uint64_t ord = ctx_->q_ - 1;
  uint64_t e = ord ? uint64_t(n) % ord : 0;
  Fq acc = ctx_->one();
  Fq base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fq Fq::frobenius(int64_t n) const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  if (n < 0) throw std::invalid_argument("frobenius: n must be >= 0");
  Fq r = *this;
  for (int64_t i = 0; i < n; ++i) r = r.pow(int64_t(ctx_->sub_q_));
  return r;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

std::vector<uint16_t> Fq::rep() const {
  if (!ctx_) throw std::domain_error("field element used before initialization");
  return std::vector<uint16_t>(rep_.begin(), rep_.begin() + ctx_->e_);
}

std::string Fq::to_string() const {
  if (!ctx_) return "<uninitialized>";
  if (ctx_->e_ == 1) return std::to_string(rep_[0]);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < ctx_->e_; ++i) {
    if (i) os << ',';
    os << rep_[i];
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// TupleStream

TupleStream::TupleStream(FieldCtxPtr ctx, uint32_t d, bool exclude_zero)
    : ctx_(std::move(ctx)), d_(d), exclude_zero_(exclude_zero) {
  if (d < 1) throw std::invalid_argument("enumerate_tuples: d must be >= 1");
  total_ = 1;
  for (uint32_t i = 0; i < d; ++i) {
    if (total_ > (uint64_t(1) << 40) / ctx_->size())
      throw std::invalid_argument("enumerate_tuples: q^d too large");
    total_ *= ctx_->size();
  }
  if (exclude_zero_) cursor_ = 1;
}

bool TupleStream::next(std::vector<Fq>& out) {
  if (cursor_ >= total_) return false;
  out.clear();
  out.reserve(d_);
  uint64_t q = ctx_->size();
  uint64_t idx = cursor_++;
  // most significant component first
  uint64_t div = total_ / q;
  for (uint32_t j = 0; j < d_; ++j) {
    out.push_back(ctx_->element((idx / div) % q));
    div = div == 1 ? 1 : div / q;
  }
  return true;
}

std::vector<std::vector<Fq>> all_tuples(const FieldCtxPtr& ctx, uint32_t d,
                                        bool exclude_zero) {
  TupleStream s(ctx, d, exclude_zero);
  std::vector<std::vector<Fq>> out;
  out.reserve(s.count());
  std::vector<Fq> t;
  while (s.next(t)) out.push_back(t);
  return out;
}

}  // namespace carlitz
