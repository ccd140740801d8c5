#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ydforge/scalar.hpp"

namespace ydforge {

using Vec = std::vector<Scalar>;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense matrix over Q(xi8). Column j of an operator matrix is the image of
/// the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec column(size_t j) const;
  void set_column(size_t j, const Vec& v);

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Vec operator*(const Matrix& m, const Vec& v);

Vec vec_zero(size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);
bool vec_lex_less(const Vec& a, const Vec& b);
Matrix outer(const Vec& a, const Vec& b);  // a b^T

/// Row echelon data from exact Gauss-Jordan elimination.
struct Rref {
  Matrix mat;                   // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column per nonzero row
  size_t rank() const { return pivots.size(); }
};

Rref rref(const Matrix& m);
size_t rank(const Matrix& m);

// Solve A x = b; nullopt when inconsistent. For underdetermined systems the
// free variables are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// Solve A X = B columnwise.
std::optional<Matrix> solve_multi(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Basis of the kernel of m.
std::vector<Vec> kernel_basis(const Matrix& m);

// Coefficients of det(lambda I - m), lowest degree first: p[0] + p[1] x + ...
// + p[n] x^n with p[n] = 1 (Faddeev-LeVerrier).
std::vector<Scalar> char_poly(const Matrix& m);

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x);

// Column spans compared via rref canonical form.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);
Matrix from_columns(const std::vector<Vec>& cols);

}  // namespace ydforge
