#include "ringcode/gf.hpp"

#include <charconv>
#include <numeric>

namespace ringcode {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t modulus) {
  if (modulus == 1) return 1;
  if (std::gcd(a, modulus) != 1) throw ParameterError("order of a non-unit modulo " + std::to_string(modulus));
  std::uint64_t t = 1, v = a % modulus;
  while (v != 1) {
    v = v * a % modulus;
    ++t;
  }
  return t;
}

namespace gf {
namespace {

Poly to_poly(std::span<const unsigned> c) {
  Poly f(c.begin(), c.end());
  poly::normalize(f);
  return f;
}

Poly code_to_poly(Elt code, unsigned p, unsigned k) {
  Poly f(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = code % p;
    code /= p;
  }
  poly::normalize(f);
  return f;
}

Elt poly_to_code(const Poly& f, unsigned p) {
  Elt code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

bool rabin_irreducible(const PrimeField& fp, const Poly& f) {
  const unsigned k = static_cast<unsigned>(poly::degree(f));
  const Poly x{0, 1};
  // frob[j] = x^{p^j} mod f
  std::vector<Poly> frob{poly::mod(fp, x, f)};
  for (unsigned j = 1; j <= k; ++j) frob.push_back(poly::powmod(fp, frob.back(), fp.p, f));
  if (frob[k] != poly::mod(fp, x, f)) return false;
  for (auto r : prime_factors(k)) {
    Poly g = poly::gcd(fp, poly::sub(fp, frob[k / r], x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const GaloisField> GaloisField::create(unsigned p, unsigned m, std::vector<unsigned> modulus,
                                                       std::optional<Elt> primitive) {
  if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw ParameterError("half degree m must be positive");
  const std::uint64_t q = ipow(p, 2 * m);
  if (q > (1u << 16)) throw ParameterError("field order exceeds 2^16");
  if (modulus.size() != 2 * m + 1) throw ParameterError("modulus degree must equal 2m");
  for (auto c : modulus)
    if (c >= p) throw ParameterError("modulus coefficient out of range for F_p");
  if (modulus.back() != 1) throw ParameterError("modulus must be monic");

  const PrimeField fp{p};
  const Poly f = to_poly(modulus);
  if (!rabin_irreducible(fp, f)) throw ParameterError("modulus is reducible over F_p");

  auto field = std::shared_ptr<GaloisField>(new GaloisField());
  field->p_ = p;
  field->m_ = m;
  field->q_ = static_cast<Elt>(q);
  field->sqrt_q_ = static_cast<Elt>(ipow(p, m));
  field->modulus_ = std::move(modulus);

  const auto group_factors = prime_factors(q - 1);
  auto has_full_order = [&](Elt code) {
    if (code == 0) return false;
    const Poly g = code_to_poly(code, p, 2 * m);
    for (auto rho : group_factors)
      if (poly::powmod(fp, g, (q - 1) / rho, f) == Poly{1}) return false;
    return true;
  };

  Elt eta = 0;
  if (primitive) {
    if (*primitive >= q || !has_full_order(*primitive))
      throw ParameterError("supplied generator is not primitive");
    eta = *primitive;
  } else {
    for (Elt c = 1; c < q; ++c)
      if (has_full_order(c)) {
        eta = c;
        break;
      }
  }
  if (eta == 0) throw InternalError("no primitive element found");
  field->build(eta);
  return field;
}

std::shared_ptr<const GaloisField> GaloisField::builtin(unsigned p, unsigned m) {
  if (p == 2 && m == 1) return create(2, 1, {1, 1, 1}, Elt{2});
  if (p == 3 && m == 1) return create(3, 1, {2, 2, 1}, Elt{3});
  if (p == 2 && m == 2) return create(2, 2, {1, 1, 0, 0, 1}, Elt{2});
  if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw ParameterError("half degree m must be positive");
  const std::uint64_t q = ipow(p, 2 * m);
  if (q > (1u << 16)) throw ParameterError("field order exceeds 2^16");
  // Smallest monic polynomial for which x is primitive.
  const std::uint64_t tails = q;  // p^{2m} choices of the lower coefficients
  const PrimeField fp{p};
  const auto group_factors = prime_factors(q - 1);
  for (std::uint64_t t = 1; t < tails; ++t) {
    std::vector<unsigned> mod(2 * m + 1, 0);
    std::uint64_t v = t;
    for (unsigned i = 0; i < 2 * m; ++i) {
      mod[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    mod[2 * m] = 1;
    if (mod[0] == 0) continue;
    const Poly f = to_poly(mod);
    const Poly x{0, 1};
    if (poly::powmod(fp, x, q - 1, f) != Poly{1}) continue;
    bool primitive = true;
    for (auto rho : group_factors)
      if (poly::powmod(fp, x, (q - 1) / rho, f) == Poly{1}) {
        primitive = false;
        break;
      }
    if (primitive) return create(p, m, mod, static_cast<Elt>(p));
  }
  throw InternalError("no primitive polynomial found");
}

void GaloisField::build(Elt eta) {
  const PrimeField fp{p_};
  const Poly f = to_poly(modulus_);
  const Poly g = code_to_poly(eta, p_, degree());
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Poly cur{1};
  for (Elt k = 0; k < q_ - 1; ++k) {
    const Elt code = poly_to_code(cur, p_);
    exp_[k] = code;
    exp_[k + q_ - 1] = code;
    log_[code] = k;
    cur = poly::mulmod(fp, cur, g, f);
  }
  if (poly_to_code(cur, p_) != 1) throw InternalError("primitive element order mismatch");

  neg_.resize(q_);
  for (Elt a = 0; a < q_; ++a) {
    Elt r = 0, scale = 1, v = a;
    for (unsigned i = 0; i < degree(); ++i) {
      r += ((p_ - v % p_) % p_) * scale;
      v /= p_;
      scale *= p_;
    }
    neg_[a] = r;
  }
  if (p_ != 2 && q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }
  conj_.resize(q_);
  for (Elt a = 0; a < q_; ++a) conj_[a] = pow(a, sqrt_q_);
}

Elt GaloisField::add_digits(Elt a, Elt b) const {
  Elt r = 0, scale = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elt GaloisField::inv(Elt a) const {
  if (a == 0) throw ParameterError("inversion of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt GaloisField::pow(Elt a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw ParameterError("negative power of zero");
    return 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (e < 0) e += n;
  return exp_[e];
}

std::uint32_t GaloisField::log(Elt a) const {
  if (a == 0) throw ParameterError("logarithm of zero");
  return log_[a];
}

Elt GaloisField::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  k %= n;
  if (k < 0) k += n;
  return exp_[k];
}

std::uint64_t GaloisField::element_order(Elt a) const {
  if (a == 0) throw ParameterError("order of zero");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(n, log_[a]);
}

Elt GaloisField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

std::vector<unsigned> GaloisField::coefficients(Elt a) const {
  std::vector<unsigned> c(degree());
  for (auto& d : c) {
    d = a % p_;
    a /= p_;
  }
  return c;
}

Elt GaloisField::from_coefficients(std::span<const unsigned> c) const {
  if (c.size() > degree()) throw ParameterError("too many coefficients for field element");
  Elt code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw ParameterError("coefficient out of range");
    code = code * p_ + c[i];
  }
  return code;
}

Elt GaloisField::mul_by_coefficients(Elt a, Elt b) const {
  const PrimeField fp{p_};
  const Poly f = to_poly(modulus_);
  return poly_to_code(poly::mulmod(fp, code_to_poly(a, p_, degree()), code_to_poly(b, p_, degree()), f), p_);
}

std::string GaloisField::format(Elt a) const {
  if (a == 0) return "0";
  if (a == 1) return "1";
  return "w^" + std::to_string(log_[a]);
}

Elt GaloisField::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParameterError("empty field element");
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParameterError("malformed field element '" + std::string(text) + "'");
    return v;
  };
  if (text.front() == 'w') {
    if (text.size() == 1) return exp_[1];
    if (text.size() < 3 || text[1] != '^') throw ParameterError("malformed field element '" + std::string(text) + "'");
    return exp(parse_int(text.substr(2)));
  }
  return from_int(parse_int(text));
}

Element::Element(FieldPtr field, Elt code) : field_(std::move(field)), code_(code) {
  if (!field_) throw ParameterError("element without field");
  if (code_ >= field_->order()) throw ParameterError("element code out of range");
}

Element Element::parse(FieldPtr field, std::string_view text) {
  const Elt c = field->parse(text);
  return Element(std::move(field), c);
}

void Element::check_same(const Element& o) const {
  if (!field_->same_as(*o.field_)) throw ParameterError("mixed-field operands");
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
Element Element::operator-(const Element& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
Element Element::operator*(const Element& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
Element Element::operator/(const Element& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}
Element Element::operator-() const { return {field_, field_->neg(code_)}; }
Element Element::inv() const { return {field_, field_->inv(code_)}; }
Element Element::pow(std::int64_t k) const { return {field_, field_->pow(code_, k)}; }
Element Element::conj() const { return {field_, field_->conj(code_)}; }
bool Element::operator==(const Element& o) const { return field_->same_as(*o.field_) && code_ == o.code_; }

}  // namespace gf
}  // namespace ringcode
