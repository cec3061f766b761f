#pragma once

// Finite fields F_q with q = p^(2m) <= 2^16, backed by log/antilog tables.
//
// An element is stored as its coefficient vector over F_p in the polynomial
// basis 1, x, ..., x^(2m-1), packed base p into an unsigned integer (the
// "code"). Zero is code 0 and one is code 1. Multiplication goes through the
// discrete-log tables relative to the primitive element; a second,
// table-free route multiplies coefficient vectors modulo the defining
// polynomial and is kept as a reference.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/poly.hpp"

namespace ringcode {

// Small number theory helpers shared across modules.
bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);  // distinct, ascending
std::uint64_t ipow(std::uint64_t base, unsigned e);
/// Smallest t >= 1 with a^t = 1 (mod modulus); requires gcd(a, modulus) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t modulus);

namespace gf {

class GaloisField {
 public:
  /// F_{p^{2m}} from an explicit monic modulus over F_p (ascending coefficients).
  /// An optional primitive element code is verified, otherwise the smallest
  /// primitive code is used.
  static std::shared_ptr<const GaloisField> create(unsigned p, unsigned m, std::vector<unsigned> modulus,
                                                   std::optional<Elt> primitive = std::nullopt);
  /// Builtin presentation: F_4 with w^2 = w + 1, F_9 with w^2 = w + 1,
  /// F_16 with w^4 = w + 1; other (p, m) use the smallest primitive polynomial.
  static std::shared_ptr<const GaloisField> builtin(unsigned p, unsigned m);

  unsigned characteristic() const { return p_; }
  unsigned half_degree() const { return m_; }
  unsigned degree() const { return 2 * m_; }
  Elt order() const { return q_; }
  /// p^m, the exponent of the conjugation automorphism.
  Elt conj_exponent() const { return sqrt_q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elt primitive() const { return exp_[1]; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::int64_t k) const;
  /// x -> x^{p^m}.
  Elt conj(Elt a) const { return conj_[a]; }

  /// Discrete log base the primitive element; a must be nonzero.
  std::uint32_t log(Elt a) const;
  /// primitive^k for any integer k.
  Elt exp(std::int64_t k) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elt a) const;

  /// Embedding of the prime field: v mod p.
  Elt from_int(std::int64_t v) const;

  std::vector<unsigned> coefficients(Elt a) const;
  Elt from_coefficients(std::span<const unsigned> c) const;
  /// Table-free multiplication of coefficient vectors modulo the defining polynomial.
  Elt mul_by_coefficients(Elt a, Elt b) const;

  /// "0", "1", or "w^k" with k the discrete log.
  std::string format(Elt a) const;
  /// Accepts "0", "1", "w", "w^k" (any integer k) and prime-field integers such as "2".
  Elt parse(std::string_view text) const;

  bool same_as(const GaloisField& other) const {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
                              primitive() == other.primitive());
  }

 private:
  GaloisField() = default;
  Elt add_digits(Elt a, Elt b) const;
  void build(Elt primitive_code);

  unsigned p_ = 0;
  unsigned m_ = 0;
  Elt q_ = 0;
  Elt sqrt_q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elt> exp_;            // length 2(q-1), exp_[k] = eta^k
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elt> neg_;
  std::vector<Elt> conj_;
  std::vector<std::uint16_t> add_table_;  // only for odd p and q <= 1024
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Value-semantic field element bound to its field; the checked API surface.
class Element {
 public:
  Element(FieldPtr field, Elt code);
  static Element parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  Elt code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element pow(std::int64_t k) const;
  Element conj() const;

  bool operator==(const Element& o) const;
  std::string to_string() const { return field_->format(code_); }

 private:
  void check_same(const Element& o) const;
  FieldPtr field_;
  Elt code_;
};

}  // namespace gf
}  // namespace ringcode
