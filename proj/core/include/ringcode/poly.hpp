#pragma once

// Dense univariate polynomials over any of the table fields in this library.
// Coefficients are stored ascending (index i holds the x^i coefficient) and
// kept normalized: no trailing zeros, so the zero polynomial is empty.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringcode/errors.hpp"

namespace ringcode {

using Elt = std::uint32_t;
using Poly = std::vector<Elt>;

template <typename F>
concept FieldOps = requires(const F& f, Elt a, Elt b) {
  { f.add(a, b) } -> std::convertible_to<Elt>;
  { f.sub(a, b) } -> std::convertible_to<Elt>;
  { f.neg(a) } -> std::convertible_to<Elt>;
  { f.mul(a, b) } -> std::convertible_to<Elt>;
  { f.inv(a) } -> std::convertible_to<Elt>;
};

/// Arithmetic modulo a small prime; used while a GaloisField is still being
/// validated and for irreducibility tests over F_p.
struct PrimeField {
  unsigned p;
  Elt add(Elt a, Elt b) const { return (a + b) % p; }
  Elt sub(Elt a, Elt b) const { return (a + p - b) % p; }
  Elt neg(Elt a) const { return (p - a) % p; }
  Elt mul(Elt a, Elt b) const { return static_cast<Elt>((std::uint64_t{a} * b) % p); }
  Elt inv(Elt a) const {
    if (a == 0) throw ParameterError("inverse of zero");
    // Fermat
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Elt>(r);
  }
};

namespace poly {

inline void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return f.empty() ? -1 : static_cast<int>(f.size()) - 1; }

inline Poly monomial(std::size_t k, Elt c = 1) {
  if (c == 0) return {};
  Poly f(k + 1, 0);
  f[k] = c;
  return f;
}

template <FieldOps F>
Poly add(const F& fld, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elt x = i < a.size() ? a[i] : 0;
    Elt y = i < b.size() ? b[i] : 0;
    r[i] = fld.add(x, y);
  }
  normalize(r);
  return r;
}

template <FieldOps F>
Poly sub(const F& fld, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elt x = i < a.size() ? a[i] : 0;
    Elt y = i < b.size() ? b[i] : 0;
    r[i] = fld.sub(x, y);
  }
  normalize(r);
  return r;
}

template <FieldOps F>
Poly scale(const F& fld, const Poly& a, Elt c) {
  if (c == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fld.mul(a[i], c);
  normalize(r);
  return r;
}

template <FieldOps F>
Poly mul(const F& fld, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
  }
  normalize(r);
  return r;
}

/// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <FieldOps F>
std::pair<Poly, Poly> divmod(const F& fld, const Poly& a, const Poly& b) {
  if (b.empty()) throw ParameterError("polynomial division by zero");
  Poly r = a;
  normalize(r);
  if (r.size() < b.size()) return {{}, r};
  const Elt lead_inv = fld.inv(b.back());
  Poly q(r.size() - b.size() + 1, 0);
  for (std::size_t k = r.size() - 1;; --k) {
    const Elt c = fld.mul(r[k], lead_inv);
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = fld.sub(r[shift + j], fld.mul(c, b[j]));
    if (k == b.size() - 1) break;
  }
  normalize(q);
  normalize(r);
  return {q, r};
}

template <FieldOps F>
Poly mod(const F& fld, const Poly& a, const Poly& b) {
  return divmod(fld, a, b).second;
}

template <FieldOps F>
Poly make_monic(const F& fld, const Poly& a) {
  if (a.empty()) return {};
  return scale(fld, a, fld.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <FieldOps F>
Poly gcd(const F& fld, Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = mod(fld, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(fld, a);
}

template <FieldOps F>
Poly mulmod(const F& fld, const Poly& a, const Poly& b, const Poly& m) {
  return mod(fld, mul(fld, a, b), m);
}

template <FieldOps F>
Poly powmod(const F& fld, Poly base, std::uint64_t e, const Poly& m) {
  Poly result = mod(fld, Poly{1}, m);
  base = mod(fld, base, m);
  while (e) {
    if (e & 1) result = mulmod(fld, result, base, m);
    e >>= 1;
    if (e) base = mulmod(fld, base, base, m);
  }
  return result;
}

template <FieldOps F>
Poly pow(const F& fld, const Poly& base, unsigned e) {
  Poly result{1};
  for (unsigned i = 0; i < e; ++i) result = mul(fld, result, base);
  return result;
}

template <FieldOps F>
Elt eval(const F& fld, const Poly& f, Elt x) {
  Elt acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = fld.add(fld.mul(acc, x), f[i]);
  return acc;
}

/// True when b divides a.
template <FieldOps F>
bool divides(const F& fld, const Poly& b, const Poly& a) {
  return mod(fld, a, b).empty();
}

}  // namespace poly
}  // namespace ringcode
