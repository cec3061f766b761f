#include "ringcode/ring.hpp"

#include <algorithm>

namespace ringcode::ring {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

RingElement ChainRing::inv(RingElement x) const {
  if (x.a == 0) throw ParameterError("element of the maximal ideal <u> is not invertible");
  const auto& f = *field_;
  const Elt ai = f.inv(x.a);
  return {ai, f.neg(f.mul(x.b, f.mul(ai, ai)))};
}

RingElement ChainRing::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParameterError("empty ring element");
  auto parse_u_term = [&](std::string_view t) -> Elt {
    t = trim(t);
    if (t == "u") return 1;
    if (t.size() > 2 && t.substr(0, 2) == "u*") return field_->parse(t.substr(2));
    throw ParameterError("malformed ring element '" + std::string(text) + "'");
  };
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) {
    if (text.front() == 'u') return {0, parse_u_term(text)};
    return {field_->parse(text), 0};
  }
  return {field_->parse(text.substr(0, plus)), parse_u_term(text.substr(plus + 1))};
}

std::string ChainRing::format(RingElement x) const {
  if (x.b == 0) return field_->format(x.a);
  if (x.a == 0) return "u*" + field_->format(x.b);
  return field_->format(x.a) + " + u*" + field_->format(x.b);
}

RingElement ChainRing::hermitian_product(const RingVector& x, const RingVector& y) const {
  if (x.size() != y.size()) throw ParameterError("length mismatch in Hermitian product");
  RingElement acc = zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], conj(y[i])));
  return acc;
}

void ChainRing::normalize(RingPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

RingPoly ChainRing::poly_add(const RingPoly& f, const RingPoly& g) const {
  RingPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = add(i < f.size() ? f[i] : zero(), i < g.size() ? g[i] : zero());
  normalize(r);
  return r;
}

RingPoly ChainRing::poly_sub(const RingPoly& f, const RingPoly& g) const {
  RingPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sub(i < f.size() ? f[i] : zero(), i < g.size() ? g[i] : zero());
  normalize(r);
  return r;
}

RingPoly ChainRing::poly_mul(const RingPoly& f, const RingPoly& g) const {
  if (f.empty() || g.empty()) return {};
  RingPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = add(r[i + j], mul(f[i], g[j]));
  normalize(r);
  return r;
}

RingPoly ChainRing::poly_mod(const RingPoly& f, const RingPoly& g) const {
  if (g.empty()) throw ParameterError("polynomial division by zero");
  if (!is_unit(g.back())) throw ParameterError("divisor has a non-unit leading coefficient");
  RingPoly r = f;
  normalize(r);
  const RingElement lead_inv = inv(g.back());
  while (r.size() >= g.size()) {
    const RingElement c = mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, g[j]));
    if (!r.back().is_zero()) throw InternalError("leading term not cancelled");
    normalize(r);
  }
  return r;
}

RingPoly ChainRing::poly_conj(const RingPoly& f) const {
  RingPoly r(f.size());
  std::transform(f.begin(), f.end(), r.begin(), [&](RingElement x) { return conj(x); });
  normalize(r);
  return r;
}

RingPoly ChainRing::lift(const Poly& f) const {
  RingPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = constant(f[i]);
  normalize(r);
  return r;
}

}  // namespace ringcode::ring
