#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psct/linalg.hpp"

namespace psct {

// Bit i set means basis covector e_{i+1} is present.
using Mask = std::uint64_t;

// Orders masks of equal popcount lexicographically by their increasing index lists.
struct LexMaskLess {
  bool operator()(Mask a, Mask b) const;
};

int popcount(Mask m);
std::vector<int> mask_indices(Mask m);  // 0-based, increasing
// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Mask> subsets(int n, int k);
// Sign of e_a ∧ e_b for disjoint masks.
int wedge_sign(Mask a, Mask b);

// Alternating k-form on (R^n, identity metric) with exact coefficients.
class KForm {
 public:
  using Terms = std::map<Mask, Scalar, LexMaskLess>;

  KForm(int dim, int degree);

  // Indices are 1-based and need not be sorted; the term is sign-normalized.
  static KForm monomial(int dim, const std::vector<int>& indices, Scalar coeff = 1);
  static KForm one_form(const Vector& v);
  static KForm volume(int dim);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Mask m) const;
  Scalar coeff(const std::vector<int>& indices) const;  // 1-based, any order
  // Evaluates the form on vectors, a(v_1, ..., v_k).
  Scalar evaluate(const std::vector<Vector>& vs) const;
  // Components of a 1-form as a vector.
  Vector as_vector() const;

  void add_term(Mask m, const Scalar& c);

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Scalar& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  KForm operator-() const;
  friend bool operator==(const KForm& a, const KForm& b);

  std::string str() const;

 private:
  int dim_;
  int degree_;
  Terms terms_;
};

// Skew endomorphism of R^n, identified with the 2-form alpha(X, Y) = g(alpha X, Y).
class SkewEndo {
 public:
  explicit SkewEndo(int dim) : m_(dim, dim) {}
  explicit SkewEndo(Matrix m);

  static SkewEndo from_form(const KForm& two_form);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  KForm to_form() const;
  Vector apply(const Vector& v) const { return m_ * v; }
  bool is_zero() const { return m_.is_zero(); }
  // Strict upper-triangle coordinates (alpha_{ij}, i<j) in lexicographic order.
  Vector coords() const;
  static SkewEndo from_coords(int dim, const Vector& c);

  friend SkewEndo operator+(const SkewEndo& a, const SkewEndo& b) { return SkewEndo(a.m_ + b.m_); }
  friend SkewEndo operator-(const SkewEndo& a, const SkewEndo& b) { return SkewEndo(a.m_ - b.m_); }
  friend SkewEndo operator*(const Scalar& s, const SkewEndo& a) { return SkewEndo(s * a.m_); }
  friend bool operator==(const SkewEndo& a, const SkewEndo& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

SkewEndo bracket(const SkewEndo& a, const SkewEndo& b);

KForm wedge(const KForm& a, const KForm& b);
KForm interior(const Vector& v, const KForm& a);
// a ⌟ b for deg a <= deg b: sum over unordered index sets, adjoint to wedge.
KForm contract(const KForm& a, const KForm& b);
KForm lie_act(const SkewEndo& A, const KForm& a);
KForm hodge(const KForm& a, int orientation = 1);
Scalar inner(const KForm& a, const KForm& b);
// (M^* a)(v_1, ..., v_k) = a(M v_1, ..., M v_k).
KForm pullback(const KForm& a, const Matrix& m);

// Matrix whose columns are the coefficient vectors of the given forms, with one
// row per multi-index occurring in any of them (other rows would be zero).
Matrix forms_as_columns(const std::vector<KForm>& forms);

}  // namespace psct
