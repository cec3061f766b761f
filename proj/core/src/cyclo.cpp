#include "ringcode/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ringcode::cyclo {

std::optional<std::size_t> CosetStructure::index_of_rep(unsigned rep) const {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (cosets[i].rep == rep) return i;
  return std::nullopt;
}

std::optional<std::size_t> CosetStructure::index_of_poly(const Poly& f) const {
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (polys[i] == f) return i;
  return std::nullopt;
}

Elt beta_from_alpha(const gf::GaloisField& field, Elt alpha, unsigned e) {
  if (alpha == 0) throw ParameterError("alpha must be nonzero");
  if (field.mul(alpha, field.conj(alpha)) != 1)
    throw ParameterError("alpha * conj(alpha) != 1");
  const std::uint64_t r = field.element_order(alpha);
  const std::uint64_t pe = ipow(field.characteristic(), e) % r;
  for (std::uint64_t f = 1; f <= field.conj_exponent(); ++f)
    if ((pe * f) % r == 1 % r) return field.pow(alpha, static_cast<std::int64_t>(f));
  throw InternalError("no inverse of p^e modulo the order of alpha");
}

CosetPtr build_cosets(gf::FieldPtr field, Elt alpha, unsigned n, unsigned e) {
  if (n == 0) throw ParameterError("n must be positive");
  const unsigned p = field->characteristic();
  if (std::gcd(n, p) != 1) throw ParameterError("n must be coprime to p");
  const Elt beta = beta_from_alpha(*field, alpha, e);

  auto cs = std::make_shared<CosetStructure>();
  cs->field = field;
  cs->p = p;
  cs->m = field->half_degree();
  cs->e = e;
  cs->n = n;
  cs->pe = static_cast<unsigned>(ipow(p, e));
  cs->N = cs->pe * n;
  cs->alpha = alpha;
  cs->r = static_cast<unsigned>(field->element_order(alpha));
  cs->beta = beta;

  const std::uint64_t rn = std::uint64_t{cs->r} * n;
  const std::uint64_t q = field->order();
  std::vector<bool> seen(rn, false);
  for (std::uint64_t j = 1 % cs->r; j < rn; j += cs->r) {
    if (seen[j]) continue;
    Coset c;
    c.rep = static_cast<unsigned>(j);
    std::uint64_t v = j;
    do {
      seen[v] = true;
      c.members.push_back(static_cast<unsigned>(v));
      v = v * q % rn;
    } while (v != j);
    cs->cosets.push_back(std::move(c));
  }
  auto coset_of = [&](std::uint64_t j) {
    for (std::size_t i = 0; i < cs->cosets.size(); ++i) {
      const auto& mem = cs->cosets[i].members;
      if (std::find(mem.begin(), mem.end(), j) != mem.end()) return i;
    }
    throw InternalError("residue outside the coset index set");
  };
  for (std::size_t i = 0; i < cs->cosets.size(); ++i) {
    const std::uint64_t image = (rn - (std::uint64_t{field->conj_exponent()} * cs->cosets[i].rep) % rn) % rn;
    cs->cosets[i].partner = coset_of(image);
    cs->cosets[i].symmetric = cs->cosets[i].partner == i;
  }

  const unsigned ell = static_cast<unsigned>(multiplicative_order_mod(q % rn, rn));
  auto ext = std::make_shared<gf::ExtensionField>(field, ell);
  cs->ext = ext;
  Elt delta = 0;
  for (Elt c = 1; c < ext->order(); ++c)
    if (ext->element_order(c) == rn && ext->pow(c, n) == ext->embed(beta)) {
      delta = c;
      break;
    }
  if (delta == 0) throw InternalError("no primitive rn-th root of unity with delta^n = beta");
  cs->delta = delta;

  Poly product{1};
  for (const auto& c : cs->cosets) {
    Poly mi{1};
    for (auto j : c.members) mi = poly::mul(*ext, mi, Poly{ext->neg(ext->pow(delta, j)), 1});
    Poly down(mi.size());
    for (std::size_t k = 0; k < mi.size(); ++k) {
      auto d = ext->descend(mi[k]);
      if (!d) throw InternalError("minimal polynomial does not descend to F_q");
      down[k] = *d;
    }
    product = poly::mul(*field, product, down);
    cs->polys.push_back(std::move(down));
  }
  Poly target = poly::monomial(n);
  target[0] = field->neg(beta);
  if (product != target) throw InternalError("product of minimal polynomials differs from x^n - beta");
  return cs;
}

Poly dagger(const gf::GaloisField& field, const Poly& f) {
  if (f.empty() || f[0] == 0) throw ParameterError("dagger requires a nonzero constant term");
  Poly r(f.rbegin(), f.rend());
  for (auto& c : r) c = field.conj(c);
  return poly::make_monic(field, r);
}

std::string format_coefficients(const gf::GaloisField& field, const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += field.format(f[i]);
  }
  return out;
}

std::string format_polynomial(const gf::GaloisField& field, const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty())
      out += field.format(f[i]);
    else if (f[i] == 1)
      out += mono;
    else
      out += field.format(f[i]) + "*" + mono;
  }
  return out;
}

Poly parse_polynomial(const gf::GaloisField& field, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParameterError("empty polynomial");
  Poly out;
  std::size_t pos = 0;
  auto fail = [&] { throw ParameterError("malformed polynomial '" + std::string(text) + "'"); };
  auto read_int = [&]() {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
    return v;
  };
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    ++pos;
  }
  while (pos <= s.size()) {
    Elt coef = 1;
    bool has_coef = false;
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = read_int();
      }
      coef = field.exp(k);
      has_coef = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = field.from_int(read_int());
      has_coef = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    std::size_t deg = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        deg = static_cast<std::size_t>(read_int());
      }
    } else if (!has_coef) {
      fail();
    }
    if (negative) coef = field.neg(coef);
    if (out.size() <= deg) out.resize(deg + 1, 0);
    out[deg] = field.add(out[deg], coef);
    if (pos == s.size()) break;
    if (s[pos] == '+')
      negative = false;
    else if (s[pos] == '-')
      negative = true;
    else
      fail();
    ++pos;
    if (pos == s.size()) fail();
  }
  poly::normalize(out);
  return out;
}

}  // namespace ringcode::cyclo
