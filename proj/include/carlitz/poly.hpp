#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/fq.hpp"

namespace carlitz {

/*
 * Poly — a polynomial in t over a finite field, ascending coefficients with
 * no trailing zeros. The zero polynomial has an empty coefficient vector and
 * degree -1.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static Poly zero(FieldCtxPtr ctx) { return Poly(std::move(ctx)); }
  static Poly one(const FieldCtxPtr& ctx);
  static Poly t(const FieldCtxPtr& ctx);
  static Poly constant(const Fq& c);
  static Poly from_coeffs(FieldCtxPtr ctx, std::vector<Fq> coeffs);
  static Poly from_ints(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs);

  const FieldCtxPtr& field() const { return ctx_; }
  int64_t deg() const { return int64_t(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Fq coeff(int64_t i) const;
  const Fq& lead() const;
  const std::vector<Fq>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Fq& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::pair<Poly, Poly> divrem(const Poly& den) const;  // (quotient, remainder)
  Poly operator/(const Poly& o) const { return divrem(o).first; }
  Poly operator%(const Poly& o) const { return divrem(o).second; }
  Poly pow(int64_t n) const;
  Poly monic() const;  // scaled so the leading coefficient is 1
  Poly shifted(int64_t k) const;  // * t^k
  Fq eval(const Fq& x) const;
  Poly derivative() const;

  // total order usable as a map key: by degree, then coefficients from the top
  static bool less(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  void check_same(const Poly& o) const;

  FieldCtxPtr ctx_;
  std::vector<Fq> c_;
};

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return Poly::less(a, b); }
};

Poly gcd(const Poly& a, const Poly& b);  // monic

/*
 * RatFunc — a reduced fraction of polynomials with monic denominator, so
 * equality is representational. Zero is 0/1.
 */
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num, Poly den);          // reduces and normalizes
  explicit RatFunc(Poly num);           // num/1

  static RatFunc zero(const FieldCtxPtr& ctx);
  static RatFunc one(const FieldCtxPtr& ctx);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldCtxPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inv() const;
  RatFunc pow(int64_t n) const;

  std::string to_string() const;

 private:
  Poly num_, den_;
};

/*
 * FactorMap — unit * prod_f f^mult, plus an unfactored residual cofactor when
 * trial division was cut off below the degree of some factor.
 */
struct FactorMap {
  Fq unit;
  std::map<Poly, int64_t, PolyLess> factors;
  std::optional<Poly> residual;
  bool complete = true;

  Poly product() const;  // multiplies everything back together
};

// Complete factorization by trial division over monic irreducibles of degree
// <= max_deg; anything left over lands in `residual` with complete = false.
FactorMap factor_trial(const Poly& f, int64_t max_deg);

// All monic irreducibles of the given degree, cached per (context, degree).
const std::vector<Poly>& irreducibles(const FieldCtxPtr& ctx, int64_t deg);

// Streams the q^d monic polynomials of degree d in a fixed order (coefficient
// odometer, constant coefficient varying fastest).
void for_each_monic(const FieldCtxPtr& ctx, int64_t d,
                    const std::function<void(const Poly&)>& fn);
std::vector<Poly> monic_polys(const FieldCtxPtr& ctx, int64_t d);

}  // namespace carlitz
