#include <gtest/gtest.h>

#include "psct/hermitian.hpp"

namespace psct {
namespace {

KForm e(int n, std::vector<int> idx, Scalar c = 1) { return KForm::monomial(n, idx, c); }

AlmostHermitian from_form(const KForm& omega) { return AlmostHermitian(SkewEndo::from_form(omega)); }

TorsionDatum sigma_of(const MetricLieAlgebra& L) { return TorsionDatum(canonical_three_form(L)); }

// Evaluates tau on (J^a e_x, J^b e_y, J^c e_z) for a, b, c in {0, 1}.
Scalar twisted(const KForm& tau, const AlmostHermitian& J, int x, int y, int z, bool a, bool b, bool c) {
  const auto n = static_cast<std::size_t>(tau.dim());
  auto arg = [&](int i, bool twist) {
    Vector v = Vector::unit(n, static_cast<std::size_t>(i));
    return twist ? J.apply(v) : v;
  };
  return tau.evaluate({arg(x, a), arg(y, b), arg(z, c)});
}

TEST(HermitianTest, FundamentalFormExamples) {
  const AlmostHermitian J = AlmostHermitian::standard(4);
  EXPECT_EQ(fundamental_form(J), e(4, {1, 2}) + e(4, {3, 4}));
  EXPECT_EQ(J.apply(Vector::unit(4, 0)), Vector::unit(4, 1));
  const AlmostHermitian minus{SkewEndo(-J.matrix())};
  EXPECT_EQ(fundamental_form(minus), -(e(4, {1, 2}) + e(4, {3, 4})));
  EXPECT_EQ(SkewEndo::from_form(fundamental_form(J)), J.J());
}

TEST(HermitianTest, RejectsInvalidStructures) {
  EXPECT_THROW(AlmostHermitian::standard(3), DomainError);
  EXPECT_THROW(AlmostHermitian(SkewEndo::from_form(2 * e(2, {1, 2}))), DomainError);
  EXPECT_THROW(AlmostHermitian(SkewEndo::from_form(e(4, {1, 2}))), DomainError);
  Matrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_THROW(AlmostHermitian(SkewEndo(m)), DomainError);
}

TEST(HermitianTest, W4VectorExamples) {
  const MetricLieAlgebra L = matrix_model("su(2) + R");
  const AlmostHermitian J = from_form(e(4, {2, 3}) + e(4, {1, 4}));
  EXPECT_EQ(w4_vector(sigma_of(L), J), Vector::unit(4, 0));
  EXPECT_TRUE(w4_vector(TorsionDatum(KForm(6, 3)), AlmostHermitian::standard(6)).is_zero());
  EXPECT_THROW(w4_vector(TorsionDatum(KForm(4, 3)), AlmostHermitian::standard(6)), DimensionError);
}

TEST(HermitianTest, CodifferentialIsTwiceTheContraction) {
  Rng rng(11);
  for (int n : {4, 6, 8}) {
    for (int s = 0; s < 10; ++s) {
      const TorsionDatum t(random_form(n, 3, rng));
      const AlmostHermitian J = random_almost_hermitian(n, rng);
      EXPECT_EQ(codifferential(t, J), 2 * w4_vector(t, J));
    }
  }
}

TEST(HermitianTest, GrayHervellaSplitReassembles) {
  Rng rng(2024);
  for (int n : {4, 6, 8}) {
    for (int s = 0; s < 50; ++s) {
      const TorsionDatum t(random_form(n, 3, rng));
      const AlmostHermitian J = random_almost_hermitian(n, rng);
      const GrayHervellaReport r = gh_components(t, J);
      ASSERT_EQ(r.w1_part + r.w3_part + w4_reconstruction(r.w4_vector, J), t.tau());
      EXPECT_EQ(r.w4_part, w4_reconstruction(r.w4_vector, J));
      EXPECT_EQ(w1_projection(r.w1_part, J), r.w1_part);
      EXPECT_TRUE(w1_projection(r.w3_part, J).is_zero());
      EXPECT_TRUE(w1_projection(r.w4_part, J).is_zero());
      EXPECT_TRUE(contract(fundamental_form(J), r.w3_part).is_zero());
      EXPECT_TRUE(contract(fundamental_form(J), r.w1_part).is_zero());
    }
  }
}

TEST(HermitianTest, W1ImageIsJAntiInvariant) {
  Rng rng(5);
  for (int s = 0; s < 10; ++s) {
    const AlmostHermitian J = random_almost_hermitian(6, rng);
    const KForm w1 = w1_projection(random_form(6, 3, rng), J);
    for (Mask m : subsets(6, 3)) {
      auto idx = mask_indices(m);
      EXPECT_EQ(twisted(w1, J, idx[0], idx[1], idx[2], true, true, false), -w1.coeff(m));
      EXPECT_EQ(twisted(w1, J, idx[0], idx[1], idx[2], true, false, true), -w1.coeff(m));
    }
  }
}

TEST(HermitianTest, GrayHervellaExamples) {
  const GrayHervellaReport zero = gh_components(TorsionDatum(KForm(4, 3)), AlmostHermitian::standard(4));
  EXPECT_TRUE(zero.class_label.empty());
  EXPECT_TRUE(zero.w1_part.is_zero() && zero.w3_part.is_zero() && zero.w4_vector.is_zero());

  const MetricLieAlgebra so5 = matrix_model("so(5)");
  const So5SpecialData d = so5_special_J();
  const GrayHervellaReport r = gh_components(sigma_of(so5), d.J, &so5);
  EXPECT_TRUE(r.w4_vector.is_zero());
  EXPECT_FALSE(r.w1_part.is_zero() && r.w3_part.is_zero());
  for (const auto& label : r.class_label) EXPECT_NE(label, "W4");

  const MetricLieAlgebra su2su2 = matrix_model("su(2) + su(2)");
  const RootDecomp rd = root_space_decomposition(su2su2, default_cartan(su2su2));
  const GrayHervellaReport s = gh_components(sigma_of(su2su2), samelson_J(su2su2, rd), &su2su2);
  ASSERT_TRUE(s.nijenhuis_zero.has_value());
  EXPECT_TRUE(*s.nijenhuis_zero);
  EXPECT_FALSE(s.w4_vector.is_zero());
}

TEST(HermitianTest, NijenhuisExamples) {
  const MetricLieAlgebra ab = matrix_model("R^4");
  Rng rng(3);
  EXPECT_TRUE(is_integrable(ab, random_almost_hermitian(4, rng)));

  const MetricLieAlgebra su3 = matrix_model("su(3)");
  const RootDecomp rd = root_space_decomposition(su3, default_cartan(su3));
  const AlmostHermitian J = samelson_J(su3, rd);
  for (const KForm& slice : nijenhuis(su3, J)) EXPECT_TRUE(slice.is_zero());

  // Flipping a simple root gives the Samelson structure of another chamber; only
  // flipping the highest root breaks integrability.
  std::vector<std::size_t> broken;
  for (std::size_t flip = 0; flip < rd.roots.size(); ++flip) {
    Matrix M = J.matrix();
    const Root& r = rd.roots[flip];
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = 0; b < 8; ++b) M(a, b) -= 2 * (r.y[a] * r.x[b] - r.x[a] * r.y[b]);
    }
    if (!is_integrable(su3, AlmostHermitian(SkewEndo(M)))) broken.push_back(flip);
  }
  ASSERT_EQ(broken.size(), 1u);
  Vector others(2);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != broken[0]) others += Vector(rd.roots[i].alpha);
  }
  EXPECT_EQ(Vector(rd.roots[broken[0]].alpha), others);
}

TEST(HermitianTest, SamelsonContractionIsSumOfPositiveRoots) {
  for (const char* name : {"su(2)", "su(3)", "so(5)", "sp(1)", "su(2) + su(2)", "su(2) + R", "sp(2)", "su(3) + R^2"}) {
    const MetricLieAlgebra L = matrix_model(name);
    if (L.dim() % 2 != 0) {
      EXPECT_THROW(AlmostHermitian::standard(L.dim()), DomainError);
      continue;
    }
    const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
    const AlmostHermitian J = samelson_J(L, rd);
    const Vector sum = positive_root_sum(rd);
    EXPECT_FALSE(sum.is_zero()) << name;
    EXPECT_EQ(w4_vector(sigma_of(L), J), sum) << name;
    const TorsionDatum tau(Scalar::fraction(-1, 2) * canonical_three_form(L));
    EXPECT_EQ(w4_vector(tau, J), Scalar::fraction(-1, 2) * sum) << name;
    EXPECT_TRUE(is_integrable(L, J)) << name;
  }
}

TEST(HermitianTest, W1W4ResidualVanishesOnW1PlusW4) {
  Rng rng(99);
  for (int n : {6, 8}) {
    for (int s = 0; s < 10; ++s) {
      const AlmostHermitian J = random_almost_hermitian(n, rng);
      const TorsionDatum tau(random_form(n, 3, rng));
      Vector theta(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) theta[static_cast<std::size_t>(i)] = rng.between(-3, 3);
      const KForm w1 = w1_projection(tau.tau(), J);
      const KForm w4 = wedge(KForm::one_form(theta), fundamental_form(J));
      EXPECT_TRUE(w1w4_residual(TorsionDatum(w1), J).residual.is_zero());
      EXPECT_TRUE(w1w4_residual(TorsionDatum(w4), J).residual.is_zero());
      EXPECT_TRUE(w1w4_residual(TorsionDatum(w1 + w4), J).residual.is_zero());
      const GrayHervellaReport r = gh_components(tau, J);
      if (!r.w3_part.is_zero()) EXPECT_FALSE(w1w4_residual(tau, J).residual.is_zero());
    }
  }
}

TEST(HermitianTest, W1W4ResidualExamples) {
  EXPECT_TRUE(w1w4_residual(TorsionDatum(KForm(6, 3)), AlmostHermitian::standard(6)).residual.is_zero());
  EXPECT_THROW(w1w4_residual(TorsionDatum(KForm(4, 3)), AlmostHermitian::standard(4)), DomainError);

  const MetricLieAlgebra padded = matrix_model("so(5) + R^2");
  const SemiKaehlerConstruction c = semikaehler_structure(padded);
  EXPECT_EQ(c.path, "so(5)");
  const W1W4Residual r = w1w4_residual(sigma_of(padded), c.J);
  EXPECT_FALSE(r.residual.is_zero());
  EXPECT_GE(r.witness[0], 1);

  const MetricLieAlgebra su2su2 = matrix_model("su(2) + su(2)");
  const RootDecomp rd = root_space_decomposition(su2su2, default_cartan(su2su2));
  EXPECT_FALSE(w1w4_residual(sigma_of(su2su2), samelson_J(su2su2, rd)).residual.is_zero());
}

TEST(HermitianTest, LefschetzIsBijectiveInDimensionFour) {
  Rng rng(44);
  for (int s = 0; s < 20; ++s) {
    const Matrix m = lefschetz_matrix(random_almost_hermitian(4, rng));
    ASSERT_EQ(m.rows(), 4u);
    ASSERT_EQ(m.cols(), 4u);
    EXPECT_FALSE(determinant(m).is_zero());
  }
  EXPECT_FALSE(canonical_three_form(matrix_model("su(2) + R")).is_zero());
}

TEST(HermitianTest, RootSystemOfDecomposition) {
  const MetricLieAlgebra su3 = matrix_model("su(3)");
  const RootSystem A2 = root_system_of(root_space_decomposition(su3, default_cartan(su3)));
  EXPECT_EQ(A2.size(), 3u);
  EXPECT_EQ(A2.ambient, 2);
  EXPECT_EQ(A2.components.size(), 1u);

  const MetricLieAlgebra so5 = matrix_model("so(5)");
  const RootSystem B2 = root_system_of(root_space_decomposition(so5, default_cartan(so5)));
  EXPECT_EQ(B2.size(), 4u);
  EXPECT_TRUE(well_balanced_search(B2).empty());

  const MetricLieAlgebra prod = matrix_model("su(2) + su(2) + R^2");
  const RootSystem AA = root_system_of(root_space_decomposition(prod, default_cartan(prod)));
  EXPECT_EQ(AA.components.size(), 2u);
  EXPECT_EQ(AA.ambient, 2);
}

void expect_semikaehler(const MetricLieAlgebra& L, const AlmostHermitian& J) {
  const auto n = static_cast<std::size_t>(L.dim());
  EXPECT_EQ(J.matrix() * J.matrix(), -Matrix::identity(n));
  EXPECT_EQ(J.matrix().transpose(), -J.matrix());
  EXPECT_TRUE(w4_vector(sigma_of(L), J).is_zero()) << L.name();
}

TEST(HermitianTest, WellBalancedConstruction) {
  for (const char* name : {"su(3)", "su(2) + su(2)", "su(5)", "sp(3) + R", "su(3) + su(3)", "so(8)"}) {
    const MetricLieAlgebra L = matrix_model(name);
    const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
    const RootSystem R = root_system_of(rd);
    WellBalancedOptions options;
    options.cap_roots = 64;
    const auto results = well_balanced_search(R, options);
    ASSERT_FALSE(results.empty()) << name;
    for (const auto& wb : results) {
      const AlmostHermitian J = build_semikaehler_J(L, rd, wb, standard_cartan_structure(rd));
      expect_semikaehler(L, J);
      for (std::size_t c : wb.complement) {
        const Root& r = rd.roots[c];
        EXPECT_TRUE(dot(J.apply(r.x), r.x).is_zero() && dot(J.apply(r.x), r.y).is_zero());
        EXPECT_TRUE(dot(J.apply(r.y), r.x).is_zero() && dot(J.apply(r.y), r.y).is_zero());
      }
    }
  }
}

TEST(HermitianTest, ConstructionAcceptsAnyCartanStructure) {
  const MetricLieAlgebra L = matrix_model("su(5)");
  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  const auto wb = well_balanced_search(root_system_of(rd)).front();
  Rng rng(8);
  for (int s = 0; s < 3; ++s) expect_semikaehler(L, build_semikaehler_J(L, rd, wb, random_almost_hermitian(4, rng)));
}

TEST(HermitianTest, ConstructionRejectsBadInput) {
  const MetricLieAlgebra L = matrix_model("su(3)");
  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  const AlmostHermitian Jt = standard_cartan_structure(rd);
  WellBalancedResult singleton{{0, 1}, {1, -1}, {2}};
  EXPECT_THROW(build_semikaehler_J(L, rd, singleton, Jt), DomainError);
  WellBalancedResult unbalanced{{0, 1, 2}, {1, 1, 1}, {}};
  EXPECT_THROW(build_semikaehler_J(L, rd, unbalanced, Jt), DomainError);
  WellBalancedResult good = well_balanced_search(root_system_of(rd)).front();
  EXPECT_THROW(build_semikaehler_J(L, rd, good, AlmostHermitian::standard(4)), DimensionError);
}

TEST(HermitianTest, SpecialConstructionPaths) {
  struct Case {
    const char* name;
    const char* path;
  };
  for (const Case& c : {Case{"so(5)", "so(5)"}, Case{"su(3) + so(5)", "so(5)"}, Case{"so(5) + R^2", "so(5)"},
                        Case{"so(3) + R^3", "so(3)"}, Case{"su(3) + su(2) + R", "so(3)"},
                        Case{"su(3)", "well-balanced"}, Case{"su(2) + su(2)", "well-balanced"}}) {
    const MetricLieAlgebra L = matrix_model(c.name);
    const SemiKaehlerConstruction s = semikaehler_structure(L);
    EXPECT_EQ(s.path, c.path) << c.name;
    expect_semikaehler(L, s.J);
  }
  EXPECT_THROW(semikaehler_structure(matrix_model("su(2) + R")), DomainError);
  EXPECT_THROW(semikaehler_structure(matrix_model("su(3) + R")), DomainError);
}

TEST(HermitianTest, So5WorkedExample) {
  const So5SpecialData d = so5_special_J();
  EXPECT_EQ(d.basis_change.transpose() * d.basis_change, Matrix::identity(10));
  EXPECT_EQ(d.sigma, d.expected_sigma);
  EXPECT_EQ(d.expected_sigma.size(), 10u);
  for (const auto& [m, c] : d.sigma.terms()) EXPECT_TRUE(c == Scalar(1) || c == Scalar(-1));

  const Matrix Jp = SkewEndo::from_form(d.j_prime).matrix();
  EXPECT_EQ(Jp * Jp, -Matrix::identity(8));
  KForm lifted(10, 2);
  for (const auto& [m, c] : d.j_prime.terms()) lifted.add_term(m << 2, c);
  EXPECT_TRUE(contract(lifted, d.sigma).is_zero());
  EXPECT_EQ(fundamental_form(AlmostHermitian(SkewEndo::from_form(d.j_prime))), d.j_prime);

  const MetricLieAlgebra so5 = matrix_model("so(5)");
  EXPECT_TRUE(w4_vector(sigma_of(so5), d.J).is_zero());
  EXPECT_EQ(pullback(fundamental_form(d.J), d.basis_change), e(10, {1, 2}) + lifted);
}

TEST(HermitianTest, SkewTorsionIntersections) {
  EXPECT_TRUE(skew_torsion_in(unitary_algebra(AlmostHermitian::standard(4))).empty());
  EXPECT_TRUE(skew_torsion_in(unitary_algebra(AlmostHermitian::standard(6))).empty());
  EXPECT_TRUE(skew_torsion_in(quaternionic_algebra(2)).empty());
  EXPECT_EQ(skew_torsion_in(full_so(4)).size(), 4u);
  EXPECT_EQ(skew_torsion_in(full_so(5)).size(), 10u);

  // so(3) acting on the first three coordinates of R^4 only admits e123.
  SubalgebraBasis so3{4, {SkewEndo::from_form(e(4, {1, 2})), SkewEndo::from_form(e(4, {1, 3})),
                          SkewEndo::from_form(e(4, {2, 3}))}, true};
  const auto v = skew_torsion_in(so3);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], e(4, {1, 2, 3}));
  for (const SkewEndo& g : so3.generators) EXPECT_TRUE(lie_act(g, v[0]).is_zero());
}

TEST(HermitianTest, QuaternionicAlgebras) {
  for (int q : {1, 2}) {
    const auto R = quaternionic_structure(q);
    const auto I = Matrix::identity(static_cast<std::size_t>(4 * q));
    for (const SkewEndo& r : R) EXPECT_EQ(r.matrix() * r.matrix(), -I);
    EXPECT_EQ(R[0].matrix() * R[1].matrix(), -(R[1].matrix() * R[0].matrix()));
    SubalgebraBasis h = quaternionic_algebra(q);
    EXPECT_EQ(h.size(), static_cast<std::size_t>(q * (2 * q + 1) + 3));
    EXPECT_TRUE(h.verify_closed());
  }
  SubalgebraBasis u3 = unitary_algebra(AlmostHermitian::standard(6));
  EXPECT_EQ(u3.size(), 9u);
  EXPECT_TRUE(u3.verify_closed());
}

TEST(HermitianTest, InvariantSkewCommutantExamples) {
  const SkewCommutant adj = invariant_skew_commutant(full_so(3));
  EXPECT_TRUE(adj.basis.empty());
  EXPECT_FALSE(adj.complex_structure.has_value());

  const SkewCommutant plane = invariant_skew_commutant(SubalgebraBasis{2, {}, true});
  EXPECT_EQ(plane.basis.size(), 1u);
  ASSERT_TRUE(plane.complex_structure.has_value());
  EXPECT_EQ(plane.complex_structure->matrix() * plane.complex_structure->matrix(), -Matrix::identity(2));

  const AlmostHermitian J = AlmostHermitian::standard(4);
  const SkewCommutant u2 = invariant_skew_commutant(unitary_algebra(J), {J.J()});
  EXPECT_EQ(u2.basis.size(), 1u);
  ASSERT_TRUE(u2.complex_structure.has_value());
  EXPECT_EQ(*u2.complex_structure, J.J());

  // Scaled commutant elements are normalized by the probe.
  const SkewCommutant scaled = invariant_skew_commutant(SubalgebraBasis{2, {}, true}, {SkewEndo::from_form(e(2, {1, 2}, 3))});
  ASSERT_TRUE(scaled.complex_structure.has_value());
  EXPECT_EQ(scaled.complex_structure->to_form(), e(2, {1, 2}));
}

}  // namespace
}  // namespace psct
