#include "ydforge/linalg.hpp"

#include <algorithm>

namespace ydforge {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Vec Matrix::column(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column size");
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix mul");
  Matrix r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matvec");
  Vec r(m.rows());
  for (size_t j = 0; j < m.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (m.at(i, j).is_zero()) continue;
      r[i] += m.at(i, j) * v[j];
    }
  }
  return r;
}

Vec vec_zero(size_t n) { return Vec(n); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool vec_lex_less(const Vec& a, const Vec& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

Matrix outer(const Vec& a, const Vec& b) {
  Matrix r(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r.at(i, j) = a[i] * b[j];
    }
  }
  return r;
}

Rref rref(const Matrix& m) {
  Rref out;
  out.mat = m;
  Matrix& a = out.mat;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
    }
    const Scalar inv_p = a.at(row, col).inverse();
    for (size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv_p;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const Scalar f = a.at(r, col);
      for (size_t j = col; j < a.cols(); ++j) a.at(r, j) -= f * a.at(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve rhs");
  Matrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const Rref r = rref(aug);
  Vec x(a.cols());
  for (size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == a.cols()) return std::nullopt;  // pivot in RHS column
    x[r.pivots[k]] = r.mat.at(k, a.cols());
  }
  return x;
}

std::optional<Matrix> solve_multi(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_multi rhs");
  Matrix x(a.cols(), b.cols());
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  const Rref r = rref(aug);
  for (size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] >= a.cols()) return std::nullopt;
  }
  // Consistency: zero rows of the coefficient part must have zero RHS.
  for (size_t i = r.pivots.size(); i < a.rows(); ++i) {
    for (size_t j = 0; j < b.cols(); ++j) {
      if (!r.mat.at(i, a.cols() + j).is_zero()) return std::nullopt;
    }
  }
  for (size_t k = 0; k < r.pivots.size(); ++k) {
    for (size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[k], j) = r.mat.at(k, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
  auto x = solve_multi(m, Matrix::identity(m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (size_t k = 0; k < r.pivots.size(); ++k) {
      v[r.pivots[k]] = -r.mat.at(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly of non-square");
  const size_t n = m.rows();
  // Faddeev-LeVerrier: p(x) = x^n + a1 x^(n-1) + ... + an.
  std::vector<Scalar> a(n + 1);
  a[n] = Scalar(1);
  Matrix mk = m;
  for (size_t k = 1; k <= n; ++k) {
    Scalar tr;
    for (size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    const Scalar ak = -(tr / Scalar(static_cast<int>(k)));
    a[n - k] = ak;
    if (k < n) {
      for (size_t i = 0; i < n; ++i) mk.at(i, i) += ak;
      mk = m * mk;
    }
  }
  return a;
}

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

Matrix from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() || b.empty()) return false;
  // Rows of the rref of the transposed column stacks are canonical.
  const Rref ra = rref(from_columns(a).transpose());
  const Rref rb = rref(from_columns(b).transpose());
  if (ra.rank() != rb.rank()) return false;
  for (size_t i = 0; i < ra.rank(); ++i) {
    for (size_t j = 0; j < ra.mat.cols(); ++j) {
      if (ra.mat.at(i, j) != rb.mat.at(i, j)) return false;
    }
  }
  return true;
}

}  // namespace ydforge
