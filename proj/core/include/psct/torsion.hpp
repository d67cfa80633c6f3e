#pragma once

#include <array>
#include <optional>
#include <vector>

#include "psct/exterior.hpp"

namespace psct {

// A 3-form regarded as the torsion of a connection at one point.
class TorsionDatum {
 public:
  explicit TorsionDatum(KForm tau);
  const KForm& tau() const { return tau_; }
  int dim() const { return tau_.dim(); }

 private:
  KForm tau_;
};

struct SubalgebraBasis {
  int dim = 0;  // dimension of the underlying vector space
  std::vector<SkewEndo> generators;
  bool closed = false;

  std::size_t size() const { return generators.size(); }
  // Exact membership of A in span(generators).
  bool contains(const SkewEndo& A) const;
  // Checks closure under commutators and updates the flag.
  bool verify_closed();
};

struct KernelBasis {
  std::vector<Vector> vectors;      // pairwise orthogonal
  std::vector<Scalar> squared_norms;
};

struct PsctCertificate {
  bool passes = false;
  KForm bianchi_b_tau2{0, 4};
  std::optional<std::array<int, 3>> jacobi_defect_witness;  // 1-based
  std::optional<int> action_defect_witness;                // 1-based
  bool gtau_in_stab = false;
  std::size_t stab_dim = 0;
  std::size_t gtau_dim = 0;
  std::size_t ker_dim = 0;
};

SkewEndo tau_map(const TorsionDatum& t, const Vector& X);
// tau_X Y, the bracket used in the Jacobi test.
Vector tau_bracket(const TorsionDatum& t, const Vector& X, const Vector& Y);
KForm bianchi_b_tau_squared(const TorsionDatum& t);
KernelBasis kernel(const TorsionDatum& t);
SubalgebraBasis stabilizer(const TorsionDatum& t);
SubalgebraBasis generated_algebra(const TorsionDatum& t);
// First lexicographic basis triple i<j<k violating Jacobi for [X,Y] := tau_X Y.
std::optional<std::array<int, 3>> jacobi_witness(const TorsionDatum& t);
PsctCertificate psct_certificate(const TorsionDatum& t);

// Lie closure of a set of skew endomorphisms, pairs processed as (later, earlier).
SubalgebraBasis lie_closure(int dim, const std::vector<SkewEndo>& gens);
SubalgebraBasis full_so(int n);

// Dense 4-tensor R(e_a, e_b, e_c, e_d) on R^n, used to check the Bianchi map.
class Tensor4 {
 public:
  explicit Tensor4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n) {}
  int dim() const { return n_; }
  Scalar& operator()(int a, int b, int c, int d) { return a_[((a * n_ + b) * n_ + c) * n_ + d]; }
  const Scalar& operator()(int a, int b, int c, int d) const { return a_[((a * n_ + b) * n_ + c) * n_ + d]; }
  static Tensor4 from_form(const KForm& four_form);
  friend bool operator==(const Tensor4& x, const Tensor4& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  int n_;
  std::vector<Scalar> a_;
};

// tau^2(X, Y, Z, W) = g(tau_Z tau_X Y, W).
Tensor4 tau_squared(const TorsionDatum& t);
// Cyclic sum over the first three slots.
Tensor4 bianchi_map(const Tensor4& r);

}  // namespace psct
