#include "ringcode/maps.hpp"

namespace ringcode::maps {

GrayMatrix GrayMatrix::make(const gf::GaloisField& f, Elt a, Elt b, Elt s, Elt t) {
  GrayMatrix M{a, b, s, t};
  if (M.determinant(f) == 0) throw ParameterError("Gray matrix is singular");
  return M;
}

GrayMatrix GrayMatrix::compatible(const gf::GaloisField& f, Elt alpha, Elt b, Elt t) {
  return make(f, f.mul(t, alpha), b, f.mul(b, alpha), t);
}

std::vector<Elt> gray_map(const gf::GaloisField& f, const GrayMatrix& M, const ring::RingVector& v) {
  const std::size_t N = v.size();
  std::vector<Elt> out(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    const Elt q = v[i].b;
    const Elt rq = f.add(v[i].a, q);
    out[i] = f.add(f.mul(M.a, q), f.mul(M.s, rq));
    out[N + i] = f.add(f.mul(M.b, q), f.mul(M.t, rq));
  }
  return out;
}

unsigned hamming_weight(const std::vector<Elt>& v) {
  unsigned w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

unsigned hamming_weight(const ring::RingVector& v) {
  unsigned w = 0;
  for (auto x : v) w += !x.is_zero();
  return w;
}

unsigned gray_weight(const gf::GaloisField& f, const GrayMatrix& M, const ring::RingVector& v) {
  return hamming_weight(gray_map(f, M, v));
}

std::optional<Elt> omega_condition(const gf::GaloisField& f, const GrayMatrix& M) {
  auto herm = [&](Elt x, Elt y, Elt z, Elt w) { return f.add(f.mul(x, f.conj(z)), f.mul(y, f.conj(w))); };
  const Elt top = herm(M.a, M.b, M.a, M.b);
  const Elt bottom = herm(M.s, M.t, M.s, M.t);
  const Elt cross = herm(M.a, M.b, M.s, M.t);
  if (cross != 0 || top != bottom || top == 0) return std::nullopt;
  return top;
}

bool constacyclic_compatible(const gf::GaloisField& f, const GrayMatrix& M, Elt alpha) {
  return M.a == f.mul(M.t, alpha) && M.s == f.mul(M.b, alpha) && M.b != M.t;
}

codes::LinearCodeF gray_image_code(const GrayMatrix& M, const codes::ConstacyclicCode& c) {
  const auto& cs = c.structure();
  const auto& f = *cs.field;
  if (f.characteristic() != 2) throw PreconditionError("Gray image transport requires characteristic 2", "p");
  if (!constacyclic_compatible(f, M, cs.alpha))
    throw PreconditionError("Gray matrix is not constacyclic-compatible with alpha", "M");
  return codes::constacyclic_code_F(cs.field, c.generator_poly(), 2 * cs.N, f.mul(cs.alpha, cs.alpha));
}

codes::LinearCodeF gray_image_span(const GrayMatrix& M, const codes::ConstacyclicCode& c) {
  const auto& f = *c.structure().field;
  Matrix m(0, 2 * c.length());
  for (const auto& w : codes::basis_words(c)) m.append_row(gray_map(f, M, w));
  auto out = codes::linear_code(c.structure().field, std::move(m));
  out.length = 2 * c.length();
  out.generator.cols = out.length;
  return out;
}

SplitVector phi_map(const ring::RingVector& v) {
  SplitVector s;
  s.left.reserve(v.size());
  s.right.reserve(v.size());
  for (auto x : v) {
    s.left.push_back(x.b);
    s.right.push_back(x.a);
  }
  return s;
}

unsigned symplectic_weight(const SplitVector& x) {
  if (x.left.size() != x.right.size()) throw ParameterError("split blocks differ in length");
  unsigned w = 0;
  for (std::size_t i = 0; i < x.left.size(); ++i) w += x.left[i] != 0 || x.right[i] != 0;
  return w;
}

Elt trace_inner_product(const gf::GaloisField& f, const SplitVector& x, const SplitVector& y) {
  if (x.left.size() != y.left.size() || x.right.size() != y.right.size() || x.left.size() != x.right.size())
    throw ParameterError("length mismatch in trace inner product");
  Elt acc = 0;
  for (std::size_t i = 0; i < x.left.size(); ++i) {
    acc = f.add(acc, f.mul(x.left[i], f.conj(y.right[i])));
    acc = f.sub(acc, f.mul(x.right[i], f.conj(y.left[i])));
  }
  return acc;
}

TransferResult trace_orthogonality_transfer(const codes::ConstacyclicCode& c) {
  const auto& f = *c.structure().field;
  std::vector<SplitVector> images;
  for (const auto& w : codes::basis_words(c)) images.push_back(phi_map(w));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < images.size(); ++j)
      if (trace_inner_product(f, images[i], images[j]) != 0) return {false, std::make_pair(i, j)};
  return {};
}

}  // namespace ringcode::maps
