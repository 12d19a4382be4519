#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/*
 * LaurentSeries — a truncated expansion at infinity in u = 1/t over a finite
 * field. Coefficients are stored for exponents lead .. lead+len-1 and are
 * trusted exactly for every exponent < prec; prec == kValInf marks an exact
 * (finite) series. A series that is zero to its precision has an empty
 * coefficient vector.
 *
 * Precision propagates pessimistically: min rule for addition,
 * min(prec_a + val_b, prec_b + val_a) for multiplication, prec - 2*val for
 * inversion.
 */
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries zero(FieldCtxPtr ctx, int64_t prec);
  static LaurentSeries one(const FieldCtxPtr& ctx);
  static LaurentSeries constant(const Fq& c);
  static LaurentSeries monomial(const Fq& c, int64_t exp);  // c * u^exp, exact
  static LaurentSeries of_poly(const Poly& p);              // exact, valuation -deg

  const FieldCtxPtr& field() const { return ctx_; }
  bool is_zero_to_prec() const { return c_.empty(); }
  bool is_exact() const { return prec_ >= kValInf; }
  int64_t prec() const { return prec_; }
  // valuation; for a zero-to-precision series this is its precision
  // (the true valuation is only known to be >= prec)
  int64_t valuation() const { return c_.empty() ? prec_ : lead_; }
  int64_t lead_exp() const { return lead_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  Fq coeff(int64_t exp) const;  // throws beyond tracked precision

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(const Fq& s) const;
  LaurentSeries operator/(const LaurentSeries& o) const;
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  bool operator==(const LaurentSeries& o) const;  // representational
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // multiplicative inverse, trusted below min(target, prec - 2*valuation);
  // requires a nonzero leading coefficient (i.e. not zero-to-precision)
  LaurentSeries inv(int64_t target) const;
  LaurentSeries inv() const;  // maximal trustworthy target; finite prec only
  LaurentSeries pow(int64_t n) const;
  LaurentSeries truncated(int64_t prec) const;

  struct Agreement {
    bool ok;                // all compared coefficients equal
    int64_t lo, hi;         // compared exponent window [lo, hi)
    int64_t first_mismatch; // valid when !ok
  };
  Agreement agrees_with(const LaurentSeries& o) const;

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const LaurentSeries& o) const;

  FieldCtxPtr ctx_;
  int64_t lead_ = 0;
  std::vector<Fq> c_;
  int64_t prec_ = kValInf;
};

// Expansion of an exact rational function at infinity, trusted below prec.
LaurentSeries laurent_expand(const RatFunc& r, int64_t prec);

}  // namespace carlitz
