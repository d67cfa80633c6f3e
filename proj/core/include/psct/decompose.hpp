#pragma once

#include <string>
#include <vector>

#include "psct/torsion.hpp"

namespace psct {

struct Subspace {
  int dim = 0;  // ambient dimension
  std::vector<Vector> basis;

  std::size_t size() const { return basis.size(); }
  static Subspace whole(int n);
  // Orthogonal projector onto the subspace.
  Matrix projector() const;
};

enum class FactorKind { Abelian, SimpleCompact, ThreeDimVol, Unrecognized };
std::string to_string(FactorKind k);

struct Factor {
  Subspace subspace;
  KForm tau_restricted{0, 3};
  FactorKind kind = FactorKind::Unrecognized;
  // Further labels that apply simultaneously, e.g. ThreeDimVol for su(2)-type factors.
  std::vector<FactorKind> also;
  std::string detail;
  Inertia killing;  // signature of the Killing form of (W, tau_W)
};

struct FactorReport {
  Subspace kernel_factor;
  std::vector<Factor> factors;
};

// Basis of the symmetric matrices commuting with every generator.
std::vector<Matrix> symmetric_commutant(const SubalgebraBasis& gens);
bool is_irreducible(const SubalgebraBasis& gens, const Subspace& W);
std::vector<Subspace> invariant_splitting(const SubalgebraBasis& gens);
FactorReport psct_factorization(const TorsionDatum& t);

}  // namespace psct
