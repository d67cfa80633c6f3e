#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psct/scalar.hpp"

namespace psct {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : v_(n) {}
  Vector(std::vector<Scalar> entries) : v_(std::move(entries)) {}
  Vector(std::initializer_list<Scalar> entries) : v_(entries) {}

  static Vector unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return v_.size(); }
  Scalar& operator[](std::size_t i) { return v_[i]; }
  const Scalar& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Scalar>& entries() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const;
  Scalar norm2() const { return dot(*this, *this); }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
  Vector operator-() const;
  friend bool operator==(const Vector& a, const Vector& b) { return a.v_ == b.v_; }

  friend Scalar dot(const Vector& a, const Vector& b);

 private:
  std::vector<Scalar> v_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  bool is_scalar_multiple_of_identity() const;
  // Row-major entries, used to treat matrices as vectors in span computations.
  Vector flatten() const { return Vector(a_); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each kept row
};

RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);
// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& a);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Scalar determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

// Canonical basis of span(vs): the nonzero rows of the reduced echelon form.
std::vector<Vector> canonical_basis(const std::vector<Vector>& vs, std::size_t dim);
// Orthogonal (not normalized) basis of span(vs); dependent inputs are dropped.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs);
// Basis of the orthogonal complement of span(vs) in dimension dim.
std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, std::size_t dim);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const Matrix& symmetric);

// Incrementally built span with exact membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  // Adds v when it is independent of the current span. Returns whether it was added.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return added_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Vector>& added() const { return added_; }

 private:
  std::size_t dim_;
  std::vector<Vector> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> added_;

  Vector reduce(Vector v) const;
};

}  // namespace psct
