#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/util.hpp"

namespace carlitz {

class Fq;
class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Largest supported degree over F_p for a single context. Covers every field
// the lab touches (base fields up to q = 2^16 and test extensions F_{q^m}
// with e*m <= 24).
inline constexpr unsigned kMaxFieldDegree = 24;

/*
 * FieldCtx — an immutable description of F_q, q = p^e, as F_p[x]/(modulus).
 *
 * Contexts are interned: make()/extension() return the same object for the
 * same parameters, so "same context" is pointer identity. `linearity_base`
 * records the cardinality of the field this context was built over; it is q
 * itself for directly constructed fields and the base q for extensions, and
 * it is the power used by Fq::frobenius.
 */
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // modulus: ascending coefficients over F_p, monic of degree e. May be empty
  // when e == 1, or for e > 1 when a built-in table entry exists (q <= 64).
  static FieldCtxPtr make(uint32_t p, uint32_t e = 1,
                          const std::vector<uint16_t>& modulus = {});

  // F_{q^m} over an existing context, with a canonical embedding of the base.
  static FieldCtxPtr extension(const FieldCtxPtr& base, uint32_t m);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return e_; }           // over F_p
  uint64_t size() const { return q_; }             // q = p^e
  uint64_t linearity_base() const { return sub_q_; }
  const std::vector<uint16_t>& modulus() const { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq from_int(int64_t n) const;     // image of an integer (reduced mod p)
  Fq element(uint64_t index) const; // index written in base p, ascending coords
  uint64_t index_of(const Fq& x) const;
  Fq generator() const;             // the class of x; requires e > 1
  Fq random(SplitMix64& rng) const;

  // Embedding of an element of the field this context extends. Identity map
  // for contexts that are not extensions.
  Fq embed(const Fq& base_element) const;
  const FieldCtx* extension_base() const { return base_; }

  std::string to_string() const;

 private:
  friend class Fq;
  FieldCtx() = default;
  static FieldCtxPtr intern(uint32_t p, uint32_t e, uint64_t sub_q,
                            std::vector<uint16_t> modulus, const FieldCtx* base,
                            const std::array<uint16_t, kMaxFieldDegree>* root);

  uint32_t p_ = 0;
  uint32_t e_ = 1;
  uint64_t q_ = 0;
  uint64_t sub_q_ = 0;
  std::vector<uint16_t> modulus_;      // ascending, size e+1 when e > 1
  const FieldCtx* base_ = nullptr;     // extension parent, interned => stable
  std::array<uint16_t, kMaxFieldDegree> root_{};  // image of base generator
};

/*
 * Fq — one element, stored as its coordinate vector in the polynomial basis.
 * Plain value type: no heap allocation, cheap to copy. Mixing elements of
 * different contexts throws.
 */
class Fq {
 public:
  Fq() = default;

  const FieldCtx* ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;
  uint16_t coord(unsigned i) const { return rep_[i]; }

  Fq operator-() const;
  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  Fq inv() const;
  Fq pow(int64_t n) const;
  // x^(q0^n) where q0 = ctx->linearity_base()
  Fq frobenius(int64_t n) const;

  std::vector<uint16_t> rep() const;
  std::string to_string() const;

 private:
  friend class FieldCtx;
  void check_same(const Fq& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::array<uint16_t, kMaxFieldDegree> rep_{};
};

// Streams all of F_q^d (optionally without the zero tuple) in a fixed order:
// tuple index runs 0..q^d-1 ascending, component j holds the field element
// with index (i / q^(d-1-j)) % q.
class TupleStream {
 public:
  TupleStream(FieldCtxPtr ctx, uint32_t d, bool exclude_zero);

  bool next(std::vector<Fq>& out);  // false when exhausted
  uint64_t count() const { return total_ - (exclude_zero_ ? 1 : 0); }

 private:
  FieldCtxPtr ctx_;
  uint32_t d_;
  bool exclude_zero_;
  uint64_t total_;
  uint64_t cursor_ = 0;
};

std::vector<std::vector<Fq>> all_tuples(const FieldCtxPtr& ctx, uint32_t d,
                                        bool exclude_zero);

}  // namespace carlitz
