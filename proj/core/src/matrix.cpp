#include "ringcode/matrix.hpp"

namespace ringcode {

void Matrix::append_row(const std::vector<Elt>& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) throw ParameterError("row length mismatch");
  data.insert(data.end(), r.begin(), r.end());
  ++rows;
}

namespace la {

std::vector<std::size_t> rref(const gf::GaloisField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Elt inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Elt factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

Matrix row_reduced(const gf::GaloisField& f, Matrix m) {
  rref(f, m);
  return m;
}

std::size_t rank(const gf::GaloisField& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const gf::GaloisField& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(0, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elt> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, free));
    out.append_row(v);
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix multiply(const gf::GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw ParameterError("matrix shape mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Elt x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

Matrix conjugate(const gf::GaloisField& f, const Matrix& m) {
  Matrix c = m;
  for (auto& x : c.data) x = f.conj(x);
  return c;
}

bool is_zero(const Matrix& m) {
  for (auto x : m.data)
    if (x != 0) return false;
  return true;
}

Matrix euclidean_dual(const gf::GaloisField& f, const Matrix& g) {
  if (g.rows == 0) {
    Matrix id(g.cols, g.cols);
    for (std::size_t i = 0; i < g.cols; ++i) id.at(i, i) = 1;
    return id;
  }
  return nullspace(f, g);
}

Matrix hermitian_dual(const gf::GaloisField& f, const Matrix& g) {
  // y is Hermitian-orthogonal to x iff conj(y) is Euclidean-orthogonal to x.
  return conjugate(f, euclidean_dual(f, g));
}

bool in_row_space(const gf::GaloisField& f, const Matrix& basis, const std::vector<Elt>& v) {
  Matrix m = basis;
  const std::size_t before = rank(f, m);
  m.append_row(v);
  return rank(f, m) == before;
}

bool same_row_space(const gf::GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) return false;
  const Matrix ra = row_reduced(f, a);
  const Matrix rb = row_reduced(f, b);
  return ra == rb;
}

}  // namespace la
}  // namespace ringcode
