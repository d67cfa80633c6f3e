#pragma once

#include <array>
#include <string>
#include <vector>

#include "psct/decompose.hpp"
#include "psct/errors.hpp"

namespace psct {

// [e_i, e_j] has coefficient c on e_k; indices are 1-based.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar c;
};

enum class LieFamily { SpecialUnitary, Orthogonal, Symplectic, Abelian, Custom };

// One summand of a direct sum, occupying coordinates [offset, offset + dim).
struct LieFactor {
  std::string name;
  LieFamily family = LieFamily::Custom;
  int k = 0;  // su(k), so(k), sp(k), R^k
  int offset = 0;
  int dim = 0;
};

class StructureError : public DomainError {
 public:
  enum class Kind { Antisymmetry, Invariance, Jacobi };
  StructureError(Kind kind, std::array<int, 3> witness, std::array<int, 3> partner, const std::string& what);
  Kind kind() const { return kind_; }
  // 1-based triple; for invariance failures `partner` is the transposed triple.
  const std::array<int, 3>& witness() const { return witness_; }
  const std::array<int, 3>& partner() const { return partner_; }

 private:
  Kind kind_;
  std::array<int, 3> witness_;
  std::array<int, 3> partner_;
};

// Lie algebra on an orthonormal basis with ad-invariant metric.
class MetricLieAlgebra {
 public:
  static MetricLieAlgebra from_structure_constants(int dim, const std::vector<StructureConstant>& constants,
                                                   std::string name = "");
  // br[i * dim + j] = [e_i, e_j] (0-based). Validation can be skipped for algebras
  // computed from matrix commutators, which satisfy the axioms by construction.
  static MetricLieAlgebra from_brackets(int dim, std::vector<Vector> br, std::string name,
                                        std::vector<LieFactor> factors, bool validate = true);

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<LieFactor>& factors() const { return factors_; }

  // [e_i, e_j], 0-based.
  const Vector& bracket(int i, int j) const { return br_[static_cast<std::size_t>(i * n_ + j)]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Matrix ad(const Vector& x) const;
  Matrix ad(int i) const { return ad(Vector::unit(n_, i)); }
  // Nonzero c_{ij}^k with i < j, 1-based.
  std::vector<StructureConstant> structure_constants() const;

  // Direct sum; factor offsets of b are shifted.
  friend MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

 private:
  int n_ = 0;
  std::string name_;
  std::vector<LieFactor> factors_;
  std::vector<Vector> br_;
};

MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

// "su(k)", "so(k)", "sp(k)", "R^k" or a sum such as "su(3) + so(5) + R^2".
// Inner products: so(k) uses -tr(XY)/2 on the basis E_ba - E_ab (a < b), except so(5),
// which uses t1, t2, X_e1, Y_e1, X_e2, Y_e2, X_{e1+e2}, Y_{e1+e2}, X_{e1-e2}, Y_{e1-e2};
// su(k) uses -2 Re tr(XY) and sp(k) uses -tr(XY) on the real 4k x 4k form.
MetricLieAlgebra matrix_model(const std::string& expression);
inline constexpr int kMaxModelDim = 36;

// The real matrices behind one simple factor of matrix_model, orthonormal for
// <X, Y> = -trace_factor * tr(XY).
struct MatrixBasis {
  std::vector<Matrix> elements;
  Scalar trace_factor;
};
MatrixBasis matrix_basis(LieFamily family, int k);

// sigma(X, Y, Z) = g([X, Y], Z).
KForm canonical_three_form(const MetricLieAlgebra& L);
// (da)(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, .., ^i, .., ^j, ..).
KForm ce_differential(const MetricLieAlgebra& L, const KForm& a);

struct Root {
  std::vector<Scalar> alpha;  // alpha(t_i) on the Cartan basis
  Vector x;
  Vector y;
};

struct RootDecomp {
  Subspace cartan;
  std::vector<Root> roots;  // positive roots

  // The vector a in the Cartan with <a, t> = alpha(t).
  Vector root_vector(const Root& r) const;
};

// Requires an abelian, self-centralizing t. Roots are ordered by the lowest
// coordinate of their root space; positivity means the first nonzero alpha(t_i) is positive.
RootDecomp root_space_decomposition(const MetricLieAlgebra& L, const Subspace& t);
// Standard Cartan subalgebra of each factor (diagonal for su/sp, rotation planes for so).
Subspace default_cartan(const MetricLieAlgebra& L);

}  // namespace psct
