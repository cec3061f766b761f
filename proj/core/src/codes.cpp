#include "ringcode/codes.hpp"

#include <algorithm>

namespace ringcode::codes {

using ring::RingElement;
using ring::RingVector;

LinearCodeF linear_code(gf::FieldPtr field, Matrix rows) {
  LinearCodeF c;
  c.length = rows.cols;
  la::rref(*field, rows);
  c.generator = std::move(rows);
  c.field = std::move(field);
  return c;
}

Matrix generator_matrix_F(const gf::GaloisField& field, const Poly& g, std::size_t n, Elt lambda) {
  Poly xn = poly::monomial(n);
  xn[0] = field.sub(xn[0], lambda);
  if (g.empty() || !poly::divides(field, g, xn)) throw ParameterError("generator does not divide x^n - lambda");
  const std::size_t deg = static_cast<std::size_t>(poly::degree(g));
  Matrix m(n - deg, n);
  for (std::size_t j = 0; j + deg < n; ++j)
    for (std::size_t i = 0; i < g.size(); ++i) m.at(j, j + i) = g[i];
  return m;
}

LinearCodeF constacyclic_code_F(gf::FieldPtr field, const Poly& g, std::size_t n, Elt lambda) {
  Matrix m = generator_matrix_F(*field, g, n, lambda);
  if (m.rows == 0) m = Matrix(0, n);
  LinearCodeF c = linear_code(std::move(field), std::move(m));
  c.length = n;
  c.generator.cols = n;
  c.lambda = lambda;
  c.generator_poly = poly::make_monic(*c.field, g);
  return c;
}

LinearCodeF hermitian_dual(const LinearCodeF& c) {
  LinearCodeF d = linear_code(c.field, la::hermitian_dual(*c.field, c.generator));
  d.length = c.length;
  d.generator.cols = c.length;
  return d;
}

LinearCodeF euclidean_dual(const LinearCodeF& c) {
  LinearCodeF d = linear_code(c.field, la::euclidean_dual(*c.field, c.generator));
  d.length = c.length;
  d.generator.cols = c.length;
  return d;
}

bool is_hermitian_self_orthogonal(const LinearCodeF& c) {
  const auto& f = *c.field;
  const Matrix gram = la::multiply(f, c.generator, la::transpose(la::conjugate(f, c.generator)));
  return la::is_zero(gram);
}

bool contains(const LinearCodeF& big, const std::vector<Elt>& word) {
  return la::in_row_space(*big.field, big.generator, word);
}

ConstacyclicCode::ConstacyclicCode(cyclo::CosetPtr cs, std::vector<unsigned> exponents)
    : cs_(std::move(cs)), exps_(std::move(exponents)) {
  if (exps_.size() != cs_->cosets.size()) throw ParameterError("one exponent per coset is required");
  for (auto a : exps_)
    if (a > cs_->max_exponent())
      throw ParameterError("exponent " + std::to_string(a) + " exceeds 2p^e = " + std::to_string(cs_->max_exponent()));
}

unsigned ConstacyclicCode::exponent_of_rep(unsigned rep) const {
  auto idx = cs_->index_of_rep(rep);
  if (!idx) throw ParameterError("unknown coset representative " + std::to_string(rep));
  return exps_[*idx];
}

Poly ConstacyclicCode::generator_poly() const {
  Poly g{1};
  for (std::size_t i = 0; i < exps_.size(); ++i)
    for (unsigned k = 0; k < exps_[i]; ++k) g = poly::mul(*cs_->field, g, cs_->polys[i]);
  return g;
}

unsigned ConstacyclicCode::size_log_q() const {
  unsigned used = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) used += exps_[i] * cs_->cosets[i].degree();
  return 2 * cs_->N - used;
}

ConstacyclicCode code_from_exponents(cyclo::CosetPtr cs, const std::vector<std::pair<unsigned, unsigned>>& exps) {
  std::vector<unsigned> v(cs->cosets.size(), 0);
  std::vector<bool> set(v.size(), false);
  for (auto [rep, a] : exps) {
    auto idx = cs->index_of_rep(rep);
    if (!idx) throw ParameterError("unknown coset representative " + std::to_string(rep));
    if (set[*idx]) throw ParameterError("duplicate coset representative " + std::to_string(rep));
    set[*idx] = true;
    v[*idx] = a;
  }
  return ConstacyclicCode(std::move(cs), std::move(v));
}

ConstacyclicCode hermitian_dual(const ConstacyclicCode& c) {
  const auto& cs = c.structure();
  std::vector<unsigned> d(cs.cosets.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[cs.cosets[i].partner] = cs.max_exponent() - c.exponents()[i];
  return ConstacyclicCode(c.structure_ptr(), std::move(d));
}

bool contains(const ConstacyclicCode& big, const ConstacyclicCode& small) {
  if (big.structure_ptr() != small.structure_ptr()) throw ParameterError("codes over different coset structures");
  for (std::size_t i = 0; i < big.exponents().size(); ++i)
    if (big.exponents()[i] > small.exponents()[i]) return false;
  return true;
}

bool is_hermitian_self_orthogonal(const ConstacyclicCode& c) { return contains(hermitian_dual(c), c); }

bool self_orthogonal_by_coset_conditions(const ConstacyclicCode& c) {
  const auto& cs = c.structure();
  for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
    const unsigned a = c.exponents()[i];
    if (cs.cosets[i].symmetric) {
      if (a < cs.pe) return false;
    } else if (a + c.exponents()[cs.cosets[i].partner] < 2 * cs.pe) {
      return false;
    }
  }
  return true;
}

namespace {

LinearCodeF field_shadow(const ConstacyclicCode& c, bool tor) {
  const auto& cs = c.structure();
  Poly g{1};
  for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
    const unsigned a = c.exponents()[i];
    const unsigned t = tor ? (a > cs.pe ? a - cs.pe : 0) : std::min(a, cs.pe);
    for (unsigned k = 0; k < t; ++k) g = poly::mul(*cs.field, g, cs.polys[i]);
  }
  return constacyclic_code_F(cs.field, g, cs.N, cs.alpha);
}

}  // namespace

LinearCodeF torsion(const ConstacyclicCode& c) { return field_shadow(c, true); }
LinearCodeF residue(const ConstacyclicCode& c) { return field_shadow(c, false); }

Poly ambient_modulus(const cyclo::CosetStructure& cs) {
  Poly h = poly::monomial(cs.N);
  h[0] = cs.field->neg(cs.alpha);
  return poly::mul(*cs.field, h, h);
}

Poly to_P(const cyclo::CosetStructure& cs, const RingVector& w) {
  if (w.size() != cs.N) throw ParameterError("word length differs from N");
  const auto& f = *cs.field;
  const Elt ainv = f.inv(cs.alpha);
  Poly P(2 * cs.N, 0);
  for (std::size_t i = 0; i < cs.N; ++i) {
    P[i] = f.sub(w[i].a, w[i].b);
    P[cs.N + i] = f.mul(ainv, w[i].b);
  }
  poly::normalize(P);
  return P;
}

RingVector from_P(const cyclo::CosetStructure& cs, const Poly& P) {
  if (P.size() > 2 * cs.N) throw ParameterError("polynomial degree exceeds 2N - 1");
  const auto& f = *cs.field;
  auto coef = [&](std::size_t i) { return i < P.size() ? P[i] : Elt{0}; };
  RingVector w(cs.N);
  for (std::size_t i = 0; i < cs.N; ++i) {
    const Elt q = f.mul(cs.alpha, coef(cs.N + i));
    w[i] = {f.add(coef(i), q), q};
  }
  return w;
}

RingVector constashift(const cyclo::CosetStructure& cs, const RingVector& w) {
  if (w.empty()) return w;
  const ring::ChainRing R(cs.field);
  RingVector out(w.size());
  out[0] = R.mul({cs.alpha, cs.alpha}, w.back());
  for (std::size_t i = 1; i < w.size(); ++i) out[i] = w[i - 1];
  return out;
}

std::vector<RingVector> basis_words(const ConstacyclicCode& c) {
  const auto& cs = c.structure();
  const Poly g = c.generator_poly();
  const std::size_t dim = c.size_log_q();
  std::vector<RingVector> out;
  out.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Poly P(j, 0);
    P.insert(P.end(), g.begin(), g.end());
    out.push_back(from_P(cs, P));
  }
  return out;
}

std::vector<Elt> to_split(const RingVector& w) {
  std::vector<Elt> v(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    v[i] = w[i].b;
    v[w.size() + i] = w[i].a;
  }
  return v;
}

RingVector from_split(const std::vector<Elt>& v) {
  if (v.size() % 2) throw ParameterError("split vector has odd length");
  const std::size_t n = v.size() / 2;
  RingVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = {v[n + i], v[i]};
  return w;
}

Matrix split_basis(const ConstacyclicCode& c) {
  Matrix m(0, 2 * c.length());
  for (const auto& w : basis_words(c)) m.append_row(to_split(w));
  return m;
}

bool membership(const ConstacyclicCode& c, const RingVector& w) {
  const Poly P = to_P(c.structure(), w);
  return poly::divides(*c.structure().field, c.generator_poly(), P);
}

void enumerate_codewords(const ConstacyclicCode& c, std::uint64_t budget,
                         const std::function<void(const RingVector&)>& visit) {
  const auto& f = *c.structure().field;
  const std::size_t dim = c.size_log_q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > budget / f.order()) throw BudgetExceeded("code size exceeds enumeration budget");
    total *= f.order();
  }
  if (total > budget) throw BudgetExceeded("code size exceeds enumeration budget");
  const auto basis = basis_words(c);
  const ring::ChainRing R(c.structure().field);
  std::vector<Elt> digits(dim, 0);
  RingVector word(c.length(), R.zero());
  for (std::uint64_t t = 0; t < total; ++t) {
    std::fill(word.begin(), word.end(), R.zero());
    for (std::size_t i = 0; i < dim; ++i) {
      if (digits[i] == 0) continue;
      for (std::size_t j = 0; j < word.size(); ++j)
        word[j] = R.add(word[j], R.mul(R.constant(digits[i]), basis[i][j]));
    }
    visit(word);
    for (std::size_t i = 0; i < dim; ++i) {
      if (++digits[i] < f.order()) break;
      digits[i] = 0;
    }
  }
}

std::vector<RingVector> RModuleMatrix::unpermuted_rows() const {
  std::vector<RingVector> out;
  for (const auto& row : rows) {
    RingVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) v[perm[j]] = row[j];
    out.push_back(std::move(v));
  }
  return out;
}

RModuleMatrix standard_form(const ring::ChainRing& R, std::vector<RingVector> rows, std::size_t length) {
  const auto& f = R.field();
  for (const auto& r : rows)
    if (r.size() != length) throw ParameterError("row length mismatch");
  RModuleMatrix out;
  out.perm.resize(length);
  for (std::size_t j = 0; j < length; ++j) out.perm[j] = j;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : rows) std::swap(r[a], r[b]);
    std::swap(out.perm[a], out.perm[b]);
  };
  auto axpy = [&](RingVector& dst, RingElement c, const RingVector& src) {
    for (std::size_t j = 0; j < length; ++j) dst[j] = R.sub(dst[j], R.mul(c, src[j]));
  };

  // Unit pivots.
  std::size_t k0 = 0;
  for (;;) {
    std::size_t pr = rows.size(), pc = length;
    for (std::size_t c = k0; c < length && pr == rows.size(); ++c)
      for (std::size_t i = k0; i < rows.size(); ++i)
        if (R.is_unit(rows[i][c])) {
          pr = i;
          pc = c;
          break;
        }
    if (pr == rows.size()) break;
    std::swap(rows[k0], rows[pr]);
    swap_cols(k0, pc);
    const RingElement inv = R.inv(rows[k0][k0]);
    for (auto& x : rows[k0]) x = R.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != k0 && !rows[i][k0].is_zero()) axpy(rows[i], rows[i][k0], rows[k0]);
    ++k0;
  }

  // The remaining rows lie in u R^N; eliminate on their u-parts.
  std::size_t k1 = 0;
  for (;;) {
    const std::size_t top = k0 + k1;
    std::size_t pr = rows.size(), pc = length;
    for (std::size_t c = top; c < length && pr == rows.size(); ++c)
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c].b != 0) {
          pr = i;
          pc = c;
          break;
        }
    if (pr == rows.size()) break;
    std::swap(rows[top], rows[pr]);
    swap_cols(top, pc);
    const Elt inv = f.inv(rows[top][top].b);
    for (auto& x : rows[top]) x = R.mul(x, R.constant(inv));
    for (std::size_t i = k0; i < rows.size(); ++i)
      if (i != top && rows[i][top].b != 0) axpy(rows[i], R.constant(rows[i][top].b), rows[top]);
    // Clear u-parts above, leaving field entries in the A block.
    for (std::size_t i = 0; i < k0; ++i)
      if (rows[i][top].b != 0) axpy(rows[i], R.constant(rows[i][top].b), rows[top]);
    ++k1;
  }
  rows.resize(k0 + k1);
  for (std::size_t i = k0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < length; ++j)
      if (j < k0 ? !rows[i][j].is_zero() : rows[i][j].a != 0)
        throw InternalError("standard form elimination left a unit below the pivots");
  out.rows = std::move(rows);
  out.k0 = k0;
  out.k1 = k1;
  return out;
}

bool is_standard_form(const ring::ChainRing& R, const RModuleMatrix& m) {
  if (m.rows.size() != m.k0 + m.k1) return false;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const auto& r = m.rows[i];
    if (r.size() != m.length()) return false;
    for (std::size_t j = 0; j < m.k0 + m.k1; ++j) {
      RingElement want = R.zero();
      if (i < m.k0 && j == i) want = R.one();
      if (i >= m.k0 && j == i) want = R.u();
      const bool free_entry = i < m.k0 && j >= m.k0;
      if (!free_entry && r[j] != want) return false;
    }
    if (i >= m.k0)
      for (std::size_t j = m.k0; j < m.length(); ++j)
        if (r[j].a != 0) return false;
  }
  return true;
}

RModuleMatrix dual_generator_matrix_R(const ring::ChainRing& R, const RModuleMatrix& m) {
  if (!is_standard_form(R, m)) throw ParameterError("matrix is not in standard form");
  const std::size_t N = m.length(), k0 = m.k0, k1 = m.k1, s = N - k0 - k1;
  auto A = [&](std::size_t i, std::size_t l) { return m.rows[i][k0 + l]; };
  auto B = [&](std::size_t i, std::size_t j) { return m.rows[i][k0 + k1 + j]; };
  auto D = [&](std::size_t l, std::size_t j) { return R.constant(m.rows[k0 + l][k0 + k1 + j].b); };

  std::vector<RingVector> h;
  for (std::size_t j = 0; j < s; ++j) {
    RingVector y(N, R.zero());
    for (std::size_t i = 0; i < k0; ++i) {
      RingElement acc = R.neg(R.conj(B(i, j)));
      for (std::size_t l = 0; l < k1; ++l) acc = R.add(acc, R.mul(R.conj(D(l, j)), R.conj(A(i, l))));
      y[i] = acc;
    }
    for (std::size_t l = 0; l < k1; ++l) y[k0 + l] = R.neg(R.conj(D(l, j)));
    y[k0 + k1 + j] = R.one();
    h.push_back(std::move(y));
  }
  for (std::size_t l = 0; l < k1; ++l) {
    RingVector y(N, R.zero());
    for (std::size_t i = 0; i < k0; ++i) y[i] = R.neg(R.mul(R.u(), R.conj(A(i, l))));
    y[k0 + l] = R.u();
    h.push_back(std::move(y));
  }
  RModuleMatrix permuted{std::move(h), 0, 0, m.perm};
  RModuleMatrix out = standard_form(R, permuted.unpermuted_rows(), N);
  if (out.k0 != s || out.k1 != k1) throw InternalError("dual generator has an unexpected type");
  return out;
}

Matrix split_span(const ring::ChainRing& R, const std::vector<RingVector>& rows, std::size_t length) {
  Matrix m(0, 2 * length);
  for (const auto& r : rows) {
    m.append_row(to_split(r));
    RingVector ur(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) ur[j] = R.mul(R.u(), r[j]);
    m.append_row(to_split(ur));
  }
  return la::row_reduced(R.field(), std::move(m));
}

RModuleMatrix generator_standard_form(const ConstacyclicCode& c) {
  const ring::ChainRing R(c.structure().field);
  return standard_form(R, basis_words(c), c.length());
}

bool gram_self_orthogonality_check(const ConstacyclicCode& c) {
  const ring::ChainRing R(c.structure().field);
  const RModuleMatrix g = generator_standard_form(c);
  for (const auto& x : g.rows)
    for (const auto& y : g.rows)
      if (!R.hermitian_product(x, y).is_zero()) return false;
  return true;
}

}  // namespace ringcode::codes
