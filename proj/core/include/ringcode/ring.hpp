#pragma once

// The chain ring R = F_q + uF_q with u^2 = 0, and polynomials over it.

#include <string>
#include <string_view>
#include <vector>

#include "ringcode/gf.hpp"

namespace ringcode::ring {

/// a + u*b.
struct RingElement {
  Elt a = 0;
  Elt b = 0;
  bool operator==(const RingElement&) const = default;
  bool is_zero() const { return a == 0 && b == 0; }
};

using RingVector = std::vector<RingElement>;
using RingPoly = std::vector<RingElement>;  // ascending, normalized

class ChainRing {
 public:
  explicit ChainRing(gf::FieldPtr field) : field_(std::move(field)) {}

  const gf::GaloisField& field() const { return *field_; }
  const gf::FieldPtr& field_ptr() const { return field_; }

  RingElement zero() const { return {0, 0}; }
  RingElement one() const { return {1, 0}; }
  RingElement u() const { return {0, 1}; }
  RingElement constant(Elt a) const { return {a, 0}; }

  RingElement add(RingElement x, RingElement y) const { return {field_->add(x.a, y.a), field_->add(x.b, y.b)}; }
  RingElement sub(RingElement x, RingElement y) const { return {field_->sub(x.a, y.a), field_->sub(x.b, y.b)}; }
  RingElement neg(RingElement x) const { return {field_->neg(x.a), field_->neg(x.b)}; }
  RingElement mul(RingElement x, RingElement y) const {
    const auto& f = *field_;
    return {f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
  }
  /// conj(a) - u*conj(b).
  RingElement conj(RingElement x) const { return {field_->conj(x.a), field_->neg(field_->conj(x.b))}; }
  bool is_unit(RingElement x) const { return x.a != 0; }
  /// a^{-1} - u*b*a^{-2}; throws for elements of the maximal ideal.
  RingElement inv(RingElement x) const;

  /// "A + u*B", "A", "u*B" with A, B in field syntax; also "u".
  RingElement parse(std::string_view text) const;
  std::string format(RingElement x) const;

  /// sum x_i conj(y_i).
  RingElement hermitian_product(const RingVector& x, const RingVector& y) const;

  // Polynomials over R.
  static void normalize(RingPoly& f);
  RingPoly poly_add(const RingPoly& f, const RingPoly& g) const;
  RingPoly poly_sub(const RingPoly& f, const RingPoly& g) const;
  RingPoly poly_mul(const RingPoly& f, const RingPoly& g) const;
  /// Remainder modulo g; the leading coefficient of g must be a unit.
  RingPoly poly_mod(const RingPoly& f, const RingPoly& g) const;
  RingPoly poly_conj(const RingPoly& f) const;
  RingPoly lift(const Poly& f) const;

 private:
  gf::FieldPtr field_;
};

}  // namespace ringcode::ring
