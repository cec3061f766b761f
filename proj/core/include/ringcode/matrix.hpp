#pragma once

// Dense matrices over a table field and the Gaussian-elimination routines
// built on them.

#include <cstddef>
#include <vector>

#include "ringcode/gf.hpp"

namespace ringcode {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elt> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elt at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::vector<Elt> row(std::size_t i) const {
    return {data.begin() + static_cast<std::ptrdiff_t>(i * cols),
            data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
  }
  void append_row(const std::vector<Elt>& r);
  bool operator==(const Matrix&) const = default;
};

namespace la {

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const gf::GaloisField& f, Matrix& m);
Matrix row_reduced(const gf::GaloisField& f, Matrix m);
std::size_t rank(const gf::GaloisField& f, Matrix m);

/// Rows spanning {x : m x^T = 0}.
Matrix nullspace(const gf::GaloisField& f, const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix multiply(const gf::GaloisField& f, const Matrix& a, const Matrix& b);
Matrix conjugate(const gf::GaloisField& f, const Matrix& m);
bool is_zero(const Matrix& m);

/// Euclidean dual: rows spanning {y : sum x_i y_i = 0 for all rows x}.
Matrix euclidean_dual(const gf::GaloisField& f, const Matrix& g);
/// Hermitian dual: rows spanning {y : sum x_i conj(y_i) = 0 for all rows x}.
Matrix hermitian_dual(const gf::GaloisField& f, const Matrix& g);

bool in_row_space(const gf::GaloisField& f, const Matrix& basis, const std::vector<Elt>& v);
bool same_row_space(const gf::GaloisField& f, const Matrix& a, const Matrix& b);

}  // namespace la
}  // namespace ringcode
