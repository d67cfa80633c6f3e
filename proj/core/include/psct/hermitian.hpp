#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psct/liealg.hpp"
#include "psct/random.hpp"
#include "psct/rootsys.hpp"

namespace psct {

// Orthogonal almost complex structure J on R^n, with fundamental form omega = g(J., .).
class AlmostHermitian {
 public:
  // Throws DomainError unless n is even, J is skew and J^2 = -I.
  explicit AlmostHermitian(SkewEndo J);
  // J e_{2i-1} = e_{2i}.
  static AlmostHermitian standard(int n);

  int dim() const { return J_.dim(); }
  const SkewEndo& J() const { return J_; }
  const Matrix& matrix() const { return J_.matrix(); }
  Vector apply(const Vector& v) const { return J_.apply(v); }

 private:
  SkewEndo J_;
};

KForm fundamental_form(const AlmostHermitian& J);
// Q J0 Q^T for the standard J0 and a random rational rotation Q.
AlmostHermitian random_almost_hermitian(int n, Rng& rng);

// (omega ⌟ tau)_k = sum_{i<j} omega_ij tau_ijk.
Vector w4_vector(const TorsionDatum& t, const AlmostHermitian& J);
// d*omega = sum_i [tau_{e_i}, J] e_i, evaluated directly.
Vector codifferential(const TorsionDatum& t, const AlmostHermitian& J);

// pi(tau)(X,Y,Z) = (tau(X,Y,Z) - tau(JX,JY,Z) - tau(JX,Y,JZ) - tau(X,JY,JZ)) / 4.
KForm w1_projection(const KForm& tau, const AlmostHermitian& J);
// The 3-form theta ∧ omega / (m - 1) whose omega-contraction is theta.
KForm w4_reconstruction(const Vector& theta, const AlmostHermitian& J);

struct GrayHervellaReport {
  KForm w1_part{0, 3};
  KForm w3_part{0, 3};
  KForm w4_part{0, 3};
  Vector w4_vector;
  std::optional<bool> nijenhuis_zero;  // set when a bracket is supplied
  std::vector<std::string> class_label;  // subset of {"W1", "W3", "W4"}
};

GrayHervellaReport gh_components(const TorsionDatum& t, const AlmostHermitian& J,
                                 const MetricLieAlgebra* bracket = nullptr);

// Slice k is the 2-form sum_{i<j} N(e_i, e_j)_k e^{ij}.
std::vector<KForm> nijenhuis(const MetricLieAlgebra& L, const AlmostHermitian& J);
bool is_integrable(const MetricLieAlgebra& L, const AlmostHermitian& J);

struct W1W4Residual {
  Scalar residual;  // max |component| of LHS - RHS
  // 1-based (a, b): X = e_a when a == b, X = e_a + e_b otherwise.
  std::array<int, 2> witness{0, 0};
};
// tau_X JX - (|X|^2 omega⌟tau - <tau_X, omega> X - <tau_JX, omega> JX) / (m - 1)
// over basis vectors and pairwise sums. Requires n = 2m >= 6.
W1W4Residual w1w4_residual(const TorsionDatum& t, const AlmostHermitian& J);

// Matrix of beta -> omega ⌟ beta from 3-forms (columns, lexicographic) to vectors.
Matrix lefschetz_matrix(const AlmostHermitian& J);

// Integer realization of the positive roots of rd in simple-root coordinates,
// keeping the order of rd.roots so that indices correspond.
RootSystem root_system_of(const RootDecomp& rd);

// Standard pairing of consecutive Cartan basis vectors.
AlmostHermitian standard_cartan_structure(const RootDecomp& rd);

// J_t + sum_S s_a J_a + J', with J_a X_a = Y_a and J' pairing the complement
// root spaces. J_t acts on coordinates with respect to rd.cartan, which must be
// orthonormal. Throws InconsistencyError if omega ⌟ sigma != 0 afterwards.
AlmostHermitian build_semikaehler_J(const MetricLieAlgebra& L, const RootDecomp& rd, const WellBalancedResult& wb,
                                    const AlmostHermitian& J_t);

// Picks a construction for a compact L of even dimension: a well-balanced
// subset when one exists, otherwise the so(3) or so(5) special assembly.
struct SemiKaehlerConstruction {
  AlmostHermitian J;
  std::string path;  // "well-balanced", "so(3)" or "so(5)"
  std::optional<WellBalancedResult> subset;
};
SemiKaehlerConstruction semikaehler_structure(const MetricLieAlgebra& L);

// J_t + sum over all positive roots of J_a.
AlmostHermitian samelson_J(const MetricLieAlgebra& L, const RootDecomp& rd);
AlmostHermitian samelson_J(const MetricLieAlgebra& L, const RootDecomp& rd, const AlmostHermitian& J_t);
// Sum of the positive roots as an element of the Cartan.
Vector positive_root_sum(const RootDecomp& rd);

struct So5SpecialData {
  Matrix basis_change;     // columns t1, t2, x1..x8 in the model basis of so(5)
  KForm sigma;             // sigma in the basis (t1, t2, x1, .., x8)
  KForm expected_sigma;    // e1∧(x12+x57+x68) + e2∧(x34+x56+x78) + x135+x146+x237+x248
  KForm j_prime;           // x17 + x26 + x38 + x45 on t^perp, coordinates x1..x8
  AlmostHermitian J;       // t1 -> t2 plus J', in the model basis
};
So5SpecialData so5_special_J();
// x1..x8 inside an algebra where so(5) occupies [offset, offset + 10).
std::array<Vector, 8> so5_x_basis(int dim, int offset);

// {tau in Lambda^3 : tau_X in span(h) for all X}.
std::vector<KForm> skew_torsion_in(const SubalgebraBasis& h);

struct SkewCommutant {
  std::vector<SkewEndo> basis;
  std::optional<SkewEndo> complex_structure;  // first probe hit, if any
};
// so(n)^h; the probe tries the candidates (when invariant), then basis elements
// and their pairwise sums and differences, normalized when A^2 = -c^2 I.
SkewCommutant invariant_skew_commutant(const SubalgebraBasis& h, const std::vector<SkewEndo>& candidates = {});

// u(m) = so(2m)^J.
SubalgebraBasis unitary_algebra(const AlmostHermitian& J);
// Right multiplication by i, j, k on H^q = R^{4q}, coordinates (1, i, j, k) per block.
std::array<SkewEndo, 3> quaternionic_structure(int q);
// sp(q) ⊕ sp(1) in so(4q): the commutant of the right multiplications plus their span.
SubalgebraBasis quaternionic_algebra(int q);

}  // namespace psct
