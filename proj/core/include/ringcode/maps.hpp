#pragma once

// Gray maps R^N -> F_q^{2N} given by a 2x2 matrix M, the split map
// r + uq -> (q, r), and the weights and pairings that go with them.

#include <optional>
#include <utility>
#include <vector>

#include "ringcode/codes.hpp"

namespace ringcode::maps {

/// M = [[a, b], [s, t]] with nonzero determinant.
struct GrayMatrix {
  Elt a = 1, b = 0, s = 0, t = 1;

  static GrayMatrix make(const gf::GaloisField& f, Elt a, Elt b, Elt s, Elt t);
  /// a = t alpha, s = b alpha.
  static GrayMatrix compatible(const gf::GaloisField& f, Elt alpha, Elt b, Elt t);
  Elt determinant(const gf::GaloisField& f) const { return f.sub(f.mul(a, t), f.mul(b, s)); }
};

/// Coordinate i maps to a q_i + s (r_i + q_i) at position i and
/// b q_i + t (r_i + q_i) at position N + i.
std::vector<Elt> gray_map(const gf::GaloisField& f, const GrayMatrix& M, const ring::RingVector& v);
unsigned gray_weight(const gf::GaloisField& f, const GrayMatrix& M, const ring::RingVector& v);
unsigned hamming_weight(const std::vector<Elt>& v);
unsigned hamming_weight(const ring::RingVector& v);

/// lambda when M conj(M)^T = lambda I with lambda != 0.
std::optional<Elt> omega_condition(const gf::GaloisField& f, const GrayMatrix& M);
/// a = t alpha, s = b alpha and b != t.
bool constacyclic_compatible(const gf::GaloisField& f, const GrayMatrix& M, Elt alpha);

/// Characteristic 2, compatible M: the alpha^2-constacyclic code of length 2N
/// generated by C's own generator polynomial.
codes::LinearCodeF gray_image_code(const GrayMatrix& M, const codes::ConstacyclicCode& c);
/// F_q-span of the images of an F_q-basis of C; valid for any M.
codes::LinearCodeF gray_image_span(const GrayMatrix& M, const codes::ConstacyclicCode& c);

struct SplitVector {
  std::vector<Elt> left;   // u-parts
  std::vector<Elt> right;  // residue parts
  bool operator==(const SplitVector&) const = default;
};

SplitVector phi_map(const ring::RingVector& v);
unsigned symplectic_weight(const SplitVector& x);
/// a . conj(b') - b . conj(a').
Elt trace_inner_product(const gf::GaloisField& f, const SplitVector& x, const SplitVector& y);

struct TransferResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // basis indices
};
/// Trace orthogonality of phi(C) checked on all pairs of an F_q-basis of C.
TransferResult trace_orthogonality_transfer(const codes::ConstacyclicCode& c);

}  // namespace ringcode::maps
