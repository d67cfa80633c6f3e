#include "psct/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace psct {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::size_t v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string alpha_str(const std::vector<Scalar>& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + a[i].str();
  return out + "]";
}

KForm sigma_of(const MetricLieAlgebra& L) { return canonical_three_form(L); }

std::string zero_str(bool zero) { return zero ? "0" : "nonzero"; }

bool closed_and_jacobi(const KForm& sigma, const MetricLieAlgebra& L) {
  return ce_differential(L, sigma).is_zero() && bianchi_b_tau_squared(TorsionDatum(sigma)).is_zero();
}

Fixture vol3() {
  const TorsionDatum t(KForm::volume(3));
  const PsctCertificate c = psct_certificate(t);
  const FactorReport f = psct_factorization(t);
  std::vector<Assertion> a{
      {"stab dimension", "3", str(c.stab_dim)},
      {"g_tau dimension", "3", str(c.gtau_dim)},
      {"stab equals so(3)", "true", str(c.stab_dim == full_so(3).size())},
      {"PSCT certificate", "true", str(c.passes)},
      {"factor count", "1", str(f.factors.size())},
      {"factor kind", "SIMPLE_COMPACT", f.factors.empty() ? "" : to_string(f.factors[0].kind)},
  };
  return {"vol3", "tau = vol_3 on R^3", t, std::move(a)};
}

Fixture dim4_theta() {
  Rng rng(2024);
  std::size_t contracted = 0, certified = 0;
  const int samples = 10;
  KForm first(4, 3);
  for (int s = 0; s < samples; ++s) {
    const KForm tau = random_form(4, 3, rng, 0.75);
    if (s == 0) first = tau;
    const Vector theta = hodge(tau).as_vector();
    if (interior(theta, tau).is_zero()) ++contracted;
    if (psct_certificate(TorsionDatum(tau)).passes) ++certified;
  }
  std::vector<Assertion> a{
      {"theta contract tau = 0 (10 seeded samples)", str(static_cast<std::size_t>(samples)), str(contracted)},
      {"PSCT certificate (10 seeded samples)", str(static_cast<std::size_t>(samples)), str(certified)},
  };
  return {"dim4-theta", "random 3-forms on R^4 with theta = *tau, seed 2024", TorsionDatum(first), std::move(a)};
}

Fixture so5_paper() {
  const MetricLieAlgebra L = matrix_model("so(5)");
  const MatrixBasis mb = matrix_basis(LieFamily::Orthogonal, 5);
  bool orthonormal = mb.trace_factor == Scalar::fraction(1, 2);
  for (std::size_t i = 0; i < mb.elements.size(); ++i) {
    for (std::size_t j = 0; j < mb.elements.size(); ++j) {
      orthonormal = orthonormal && -mb.trace_factor * (mb.elements[i] * mb.elements[j]).trace() == Scalar(i == j ? 1 : 0);
    }
  }
  const So5SpecialData d = so5_special_J();
  const Matrix Jp = SkewEndo::from_form(d.j_prime).matrix();
  KForm lifted(10, 2);
  for (const auto& [m, c] : d.j_prime.terms()) lifted.add_term(m << 2, c);
  bool unit_coeffs = true;
  for (const auto& [m, c] : d.sigma.terms()) unit_coeffs = unit_coeffs && c.abs() == Scalar(1);

  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  std::vector<std::string> alphas;
  bool root_action = true;
  for (const Root& r : rd.roots) {
    alphas.push_back(alpha_str(r.alpha));
    for (std::size_t i = 0; i < rd.cartan.size(); ++i) {
      const Matrix ad = L.ad(rd.cartan.basis[i]);
      root_action = root_action && ad * r.x == r.alpha[i] * r.y && ad * r.y == -(r.alpha[i] * r.x);
    }
  }
  const GrayHervellaReport gh = gh_components(TorsionDatum(sigma_of(L)), d.J);
  std::vector<Assertion> a{
      {"basis orthonormal under -tr(XY)/2", "true", str(orthonormal)},
      {"sigma in the x-basis", d.expected_sigma.str(), d.sigma.str()},
      {"sigma monomial count", "10", str(d.sigma.size())},
      {"sigma coefficients are +-1", "true", str(unit_coeffs)},
      {"positive roots", "[1,0] [0,1] [1,1] [1,-1]", join(alphas)},
      {"ad(t) X = alpha(t) Y, ad(t) Y = -alpha(t) X", "true", str(root_action)},
      {"J'^2 = -I on t-perp", "true", str(Jp * Jp == -Matrix::identity(8))},
      {"J' contract sigma", "0", zero_str(contract(lifted, d.sigma).is_zero())},
      {"(J_t + J') contract sigma", "0", zero_str(w4_vector(TorsionDatum(sigma_of(L)), d.J).is_zero())},
      {"Gray-Hervella class has no W4", "true",
       str(std::find(gh.class_label.begin(), gh.class_label.end(), "W4") == gh.class_label.end())},
      {"construction path", "so(5)", semikaehler_structure(L).path},
  };
  return {"so5-paper", "so(5) with the ten-matrix basis, the x-basis and J'", L, std::move(a)};
}

Fixture g2_fixture() {
  const KForm phi = g2_form();
  const TorsionDatum t(phi);
  Rng rng(7);
  std::size_t nonzero = 0, annihilating = 0;
  while (nonzero < 200) {
    Vector x(7), y(7);
    for (std::size_t i = 0; i < 7; ++i) {
      x[i] = rng.between(-3, 3);
      y[i] = rng.between(-3, 3);
    }
    const KForm xy = wedge(KForm::one_form(x), KForm::one_form(y));
    if (xy.is_zero()) continue;
    ++nonzero;
    if (lie_act(SkewEndo::from_form(xy), phi).is_zero()) ++annihilating;
  }
  std::vector<Assertion> a{
      {"stab dimension", "14", str(stabilizer(t).size())},
      {"decomposables in stab (200 seeded nonzero samples)", "0", str(annihilating)},
  };
  return {"g2-form", "the G2 3-form e123 + e145 + e167 + e246 - e257 - e347 - e356", phi, std::move(a)};
}

Fixture cartan_schouten(const std::string& name, const std::string& algebra) {
  const MetricLieAlgebra L = matrix_model(algebra);
  const KForm sigma = sigma_of(L);
  std::vector<Assertion> a{
      {"d sigma", "0", zero_str(ce_differential(L, sigma).is_zero())},
      {"b(sigma^2)", "0", zero_str(bianchi_b_tau_squared(TorsionDatum(sigma)).is_zero())},
  };
  for (auto [p, q] : {std::pair{-1, 1}, {-1, 2}, {0, 1}, {1, 2}, {1, 1}}) {
    const Scalar t = Scalar::fraction(p, q);
    const PsctCertificate c = psct_certificate(TorsionDatum(Scalar::fraction(1, 2) * t * sigma));
    a.push_back({"PSCT certificate at t = " + t.str(), "true", str(c.passes)});
  }
  a.push_back({"kernel dimension", "0", str(kernel(TorsionDatum(sigma)).vectors.size())});
  return {name, "Cartan-Schouten torsion (t/2) sigma on " + algebra, L, std::move(a)};
}

Fixture su2_su2() {
  const MetricLieAlgebra L = matrix_model("su(2) + su(2)");
  const KForm sigma = sigma_of(L);
  const FactorReport f = psct_factorization(TorsionDatum(sigma));
  std::vector<std::string> kinds;
  for (const Factor& x : f.factors) kinds.push_back(to_string(x.kind));
  std::vector<Assertion> a{
      {"closed and Jacobi", "true", str(closed_and_jacobi(sigma, L))},
      {"factor count", "2", str(f.factors.size())},
      {"factor kinds", "SIMPLE_COMPACT SIMPLE_COMPACT", join(kinds)},
      {"construction path", "well-balanced", semikaehler_structure(L).path},
  };
  return {"su2+su2", "su(2) + su(2) with its canonical 3-form", L, std::move(a)};
}

Fixture su2_r() {
  const MetricLieAlgebra L = matrix_model("su(2) + R");
  Rng rng(31);
  std::size_t invertible = 0;
  for (int s = 0; s < 20; ++s) {
    if (!determinant(lefschetz_matrix(random_almost_hermitian(4, rng))).is_zero()) ++invertible;
  }
  std::string construction = "found";
  try {
    semikaehler_structure(L);
  } catch (const DomainError&) {
    construction = "obstructed";
  }
  std::vector<Assertion> a{
      {"sigma", "nonzero", zero_str(sigma_of(L).is_zero())},
      {"invertible Lefschetz maps (20 seeded J)", "20", str(invertible)},
      {"semi-Kähler construction", "obstructed", construction},
  };
  return {"su2+R-obstruction", "su(2) + R admits no J with omega contract sigma = 0", L, std::move(a)};
}

Fixture samelson_su3() {
  const MetricLieAlgebra L = matrix_model("su(3)");
  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  const AlmostHermitian J = samelson_J(L, rd);
  const Vector sum = positive_root_sum(rd);
  const TorsionDatum tau(Scalar::fraction(-1, 2) * sigma_of(L));
  std::vector<Assertion> a{
      {"Nijenhuis tensor", "0", zero_str(is_integrable(L, J))},
      {"omega contract tau = -(sum of positive roots)/2", "true",
       str(w4_vector(tau, J) == Scalar::fraction(-1, 2) * sum)},
      {"sum of positive roots", "nonzero", zero_str(sum.is_zero())},
  };
  return {"samelson-su3", "Samelson complex structure on su(3), tau = -sigma/2", J, std::move(a)};
}

const std::map<std::string, std::function<Fixture()>>& registry() {
  static const std::map<std::string, std::function<Fixture()>> r{
      {"vol3", vol3},
      {"dim4-theta", dim4_theta},
      {"so5-paper", so5_paper},
      {"g2-form", g2_fixture},
      {"cartan-schouten-su2", [] { return cartan_schouten("cartan-schouten-su2", "su(2)"); }},
      {"cartan-schouten-su3", [] { return cartan_schouten("cartan-schouten-su3", "su(3)"); }},
      {"su2+su2", su2_su2},
      {"su2+R-obstruction", su2_r},
      {"samelson-su3", samelson_su3},
  };
  return r;
}

}  // namespace

bool Fixture::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed(); });
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

Fixture fixture(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown fixture: " + name);
  return it->second();
}

std::vector<std::string> catalog_algebras() {
  return {"su(2)", "su(3)", "so(3)", "so(5)", "sp(1)", "su(2) + su(2)", "su(2) + R", "R^1", "R^2", "R^4"};
}

KForm g2_form() {
  auto e = [](std::vector<int> idx, int c = 1) { return KForm::monomial(7, idx, c); };
  return e({1, 2, 3}) + e({1, 4, 5}) + e({1, 6, 7}) + e({2, 4, 6}) + e({2, 5, 7}, -1) + e({3, 4, 7}, -1) +
         e({3, 5, 6}, -1);
}

}  // namespace psct
