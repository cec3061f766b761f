#include "ringcode/extension.hpp"

#include <numeric>

namespace ringcode::gf {
namespace {

bool x_is_primitive(const GaloisField& f, const Poly& mod, std::uint64_t Q, const std::vector<std::uint64_t>& factors) {
  const Poly x{0, 1};
  if (poly::powmod(f, x, Q - 1, mod) != Poly{1}) return false;
  for (auto rho : factors)
    if (poly::powmod(f, x, (Q - 1) / rho, mod) == Poly{1}) return false;
  return true;
}

}  // namespace

ExtensionField::ExtensionField(FieldPtr base, unsigned ell) : base_(std::move(base)), ell_(ell) {
  if (ell_ == 0) throw ParameterError("extension degree must be positive");
  const std::uint64_t q = base_->order();
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < ell_; ++i) {
    Q *= q;
    if (Q > kMaxOrder) throw ParameterError("extension field order exceeds 2^22");
  }
  Q_ = static_cast<std::uint32_t>(Q);

  const auto factors = prime_factors(Q - 1);
  for (std::uint64_t t = 1; t < Q && modulus_.empty(); ++t) {
    Poly f(ell_ + 1, 0);
    std::uint64_t v = t;
    for (unsigned i = 0; i < ell_; ++i) {
      f[i] = static_cast<Elt>(v % q);
      v /= q;
    }
    f[ell_] = 1;
    if (f[0] == 0) continue;
    if (x_is_primitive(*base_, f, Q, factors)) modulus_ = f;
  }
  if (modulus_.empty()) throw InternalError("no primitive polynomial for extension");

  // Tables: multiply by y, reducing y^l = -sum f_i y^i.
  exp_.assign(2 * (Q - 1), 0);
  log_.assign(Q, 0);
  std::vector<Elt> cur(ell_, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < Q - 1; ++k) {
    Elt code = 0;
    for (unsigned i = ell_; i-- > 0;) code = code * static_cast<Elt>(q) + cur[i];
    exp_[k] = code;
    exp_[k + Q - 1] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    const Elt top = cur[ell_ - 1];
    for (unsigned i = ell_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < ell_; ++i) cur[i] = base_->sub(cur[i], base_->mul(top, modulus_[i]));
  }
}

Elt ExtensionField::add(Elt a, Elt b) const {
  const Elt q = base_->order();
  Elt r = 0, scale = 1;
  for (unsigned i = 0; i < ell_; ++i) {
    r += base_->add(a % q, b % q) * scale;
    a /= q;
    b /= q;
    scale *= q;
  }
  return r;
}

Elt ExtensionField::neg(Elt a) const {
  const Elt q = base_->order();
  Elt r = 0, scale = 1;
  for (unsigned i = 0; i < ell_; ++i) {
    r += base_->neg(a % q) * scale;
    a /= q;
    scale *= q;
  }
  return r;
}

Elt ExtensionField::inv(Elt a) const {
  if (a == 0) throw ParameterError("inversion of zero");
  return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
}

Elt ExtensionField::pow(Elt a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw ParameterError("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = Q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (e < 0) e += n;
  return exp_[e];
}

std::uint64_t ExtensionField::element_order(Elt a) const {
  if (a == 0) throw ParameterError("order of zero");
  const std::uint64_t n = Q_ - 1;
  return n / std::gcd<std::uint64_t>(n, log_[a]);
}

std::optional<Elt> ExtensionField::descend(Elt y) const {
  if (pow(y, base_->order()) != y) return std::nullopt;
  if (y >= base_->order()) throw InternalError("Frobenius-fixed element outside the constant subfield");
  return y;
}

}  // namespace ringcode::gf
