#include "psct/linalg.hpp"

#include <algorithm>

#include "psct/errors.hpp"

namespace psct {

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (dim() != o.dim()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!o.v_[i].is_zero()) v_[i] += o.v_[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (dim() != o.dim()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!o.v_[i].is_zero()) v_[i] -= o.v_[i];
  }
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : v_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a.v_[i].is_zero() && !b.v_[i].is_zero()) s += a.v_[i] * b.v_[i];
  }
  return s;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dim() != rows) throw DimensionError("column dimension mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw DimensionError("row dimension mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool Matrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, r).is_zero()) return false;
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != -(*this)(c, r)) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar_multiple_of_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c ? (*this)(r, c) != (*this)(0, 0) : !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.dim()) throw DimensionError("matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(Matrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = std::move(a(i, j));
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
  RowEchelon e = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (!e.reduced(i, f).is_zero()) v[e.pivots[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.dim() != a.rows()) throw DimensionError("right-hand side dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

Scalar determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  RowEchelon e = rref(Matrix::from_rows(vs, dim));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  std::vector<Scalar> norms;
  for (const auto& v : vs) {
    Vector w = v;
    for (std::size_t i = 0; i < out.size(); ++i) {
      Scalar c = dot(v, out[i]);
      if (!c.is_zero()) w -= (c / norms[i]) * out[i];
    }
    if (w.is_zero()) continue;
    norms.push_back(w.norm2());
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(Vector::unit(dim, i));
    return all;
  }
  return nullspace(Matrix::from_rows(vs, dim));
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("inertia requires a symmetric matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia in;
  // Congruence diagonalization; a zero pivot with a nonzero off-diagonal entry
  // is repaired by adding the partner row and column first.
  std::size_t k = 0;
  while (k < n) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(k, j).is_zero()) ++j;
      if (j == n) {
        ++in.zero;
        ++k;
        continue;
      }
      std::size_t d = j;
      for (std::size_t t = k + 1; t < n; ++t) {
        if (!a(t, t).is_zero()) {
          d = t;
          break;
        }
      }
      if (!a(d, d).is_zero()) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(d, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, d));
      } else {
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
      continue;
    }
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (a(k, k).sign() > 0) {
      ++in.positive;
    } else {
      ++in.negative;
    }
    ++k;
  }
  return in;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;
    v -= f * echelon_[i];
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.dim() != dim_) throw DimensionError("span dimension mismatch");
  return reduce(v).is_zero();
}

bool SpanBuilder::insert(const Vector& v) {
  if (v.dim() != dim_) throw DimensionError("span dimension mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  r *= r[p].inverse();
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    if (!echelon_[i][p].is_zero()) {
      Scalar f = echelon_[i][p];
      echelon_[i] -= f * r;
    }
  }
  echelon_.push_back(std::move(r));
  pivots_.push_back(p);
  added_.push_back(v);
  return true;
}

}  // namespace psct
