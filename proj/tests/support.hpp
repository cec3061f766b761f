#pragma once

// Shared helpers for the test programs: seeded sampling and brute-force
// oracles that avoid the library paths they check.

#include <random>

#include "ringcode/maps.hpp"
#include "ringcode/quantum.hpp"

namespace testing {

using namespace ringcode;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20241017);
  return g;
}

inline Elt random_elt(const gf::GaloisField& f) {
  return std::uniform_int_distribution<Elt>(0, f.order() - 1)(rng());
}

inline Elt random_nonzero(const gf::GaloisField& f) {
  return std::uniform_int_distribution<Elt>(1, f.order() - 1)(rng());
}

inline ring::RingVector random_ring_vector(const gf::GaloisField& f, std::size_t n) {
  ring::RingVector v(n);
  for (auto& x : v) x = {random_elt(f), random_elt(f)};
  return v;
}

inline std::vector<Elt> random_vector(const gf::GaloisField& f, std::size_t n) {
  std::vector<Elt> v(n);
  for (auto& x : v) x = random_elt(f);
  return v;
}

/// Random exponent vector in [0, 2p^e].
inline codes::ConstacyclicCode random_code(const cyclo::CosetPtr& cs) {
  std::uniform_int_distribution<unsigned> d(0, cs->max_exponent());
  std::vector<unsigned> e(cs->cosets.size());
  for (auto& a : e) a = d(rng());
  return codes::ConstacyclicCode(cs, e);
}

/// Random exponent vector satisfying the coset self-orthogonality conditions,
/// stated here directly: a >= p^e on symmetric cosets, a + a' >= 2p^e on pairs.
inline codes::ConstacyclicCode random_self_orthogonal_code(const cyclo::CosetPtr& cs) {
  const unsigned top = cs->max_exponent();
  std::vector<unsigned> e(cs->cosets.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& c = cs->cosets[i];
    if (c.symmetric) {
      e[i] = std::uniform_int_distribution<unsigned>(cs->pe, top)(rng());
    } else if (i < c.partner) {
      e[i] = std::uniform_int_distribution<unsigned>(0, top)(rng());
      e[c.partner] = std::uniform_int_distribution<unsigned>(top - e[i], top)(rng());
    }
  }
  return codes::ConstacyclicCode(cs, e);
}

/// All F_q-linear combinations of the rows (q^rows words).
inline std::vector<std::vector<Elt>> span_words(const gf::GaloisField& f, const Matrix& g) {
  std::vector<std::vector<Elt>> out{std::vector<Elt>(g.cols, 0)};
  for (std::size_t r = 0; r < g.rows; ++r) {
    std::vector<std::vector<Elt>> next;
    for (const auto& w : out)
      for (Elt c = 0; c < f.order(); ++c) {
        auto v = w;
        for (std::size_t j = 0; j < g.cols; ++j) v[j] = f.add(v[j], f.mul(c, g.at(r, j)));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// Minimum nonzero Hamming weight by listing every codeword.
inline unsigned brute_distance(const gf::GaloisField& f, const Matrix& g) {
  unsigned best = ~0u;
  for (const auto& w : span_words(f, g)) {
    unsigned wt = 0;
    for (auto x : w) wt += x != 0;
    if (wt && wt < best) best = wt;
  }
  return best;
}

/// Hermitian dual of a ring code by solving sum x_i conj(y_i) = 0 over F_q
/// for the unknown conj(y) in split coordinates, one equation per component.
inline Matrix brute_dual_split(const codes::ConstacyclicCode& c) {
  const auto& f = *c.structure().field;
  const std::size_t N = c.length();
  const ring::ChainRing R(c.structure().field);
  Matrix sys(0, 2 * N);
  for (const auto& x : codes::basis_words(c)) {
    // z = conj(y) = (z_a, z_b); x*z = x.a z.a + u (x.a z.b + x.b z.a).
    std::vector<Elt> ea(2 * N, 0), eb(2 * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
      ea[N + i] = x[i].a;
      eb[N + i] = x[i].b;
      eb[i] = x[i].a;
    }
    sys.append_row(ea);
    sys.append_row(eb);
  }
  const Matrix ns = la::nullspace(f, sys);
  Matrix out(0, 2 * N);
  for (std::size_t r = 0; r < ns.rows; ++r) {
    auto w = codes::from_split(ns.row(r));
    for (auto& e : w) e = R.conj(e);
    out.append_row(codes::to_split(w));
  }
  return la::row_reduced(f, out);
}

inline std::vector<Elt> constashift_f(const gf::GaloisField& f, const std::vector<Elt>& v, Elt lambda) {
  std::vector<Elt> out(v.size());
  out[0] = f.mul(lambda, v.back());
  for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
  return out;
}

}  // namespace testing
