// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "psct/catalog.hpp"
#include "psct/random.hpp"

namespace psct {
namespace {

// Wall-clock budgets in seconds; zero means no budget.
constexpr double kBudgetSo5 = 1.0;
constexpr double kBudgetEquivalence = 30.0;
constexpr double kBudgetUniqueness = 10.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Vector unit(int n, int i) { return Vector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1)); }

Outcome so5_golden() {
  Outcome o;
  const Fixture f = fixture("so5-paper");
  for (const Assertion& a : f.assertions) require(o, a.passed(), a.name + ": expected " + a.expected + ", got " + a.actual);
  const So5SpecialData d = so5_special_J();
  // The printed expression: e1^(x12+x57+x68) + e2^(x34+x56+x78) + x135+x146+x237+x248.
  require(o, d.sigma == d.expected_sigma, "sigma differs from the printed expression");
  require(o, d.sigma.size() == d.expected_sigma.size(), "monomial count differs from the printed expression");
  o.detail = o.ok ? std::to_string(d.sigma.size()) + " monomials, all +-1" : o.detail;
  return o;
}

bool action_condition(const TorsionDatum& t) {
  for (int i = 1; i <= t.dim(); ++i) {
    if (!lie_act(tau_map(t, unit(t.dim(), i)), t.tau()).is_zero()) return false;
  }
  return true;
}

bool gtau_in_stab(const TorsionDatum& t) {
  const SubalgebraBasis g = generated_algebra(t);
  return std::all_of(g.generators.begin(), g.generators.end(),
                     [&](const SkewEndo& A) { return lie_act(A, t.tau()).is_zero(); });
}

Outcome condition_equivalence() {
  Outcome o;
  Rng rng(2);
  int passing = 0, total = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int s = 0; s < 50; ++s) {
      const TorsionDatum t(random_form(n, 3, rng));
      const KForm b = bianchi_b_tau_squared(t);
      const bool ii = b.is_zero();
      const bool iii = !jacobi_witness(t).has_value();
      const bool vi = action_condition(t);
      const bool vii = gtau_in_stab(t);
      const std::string tag = "n=" + std::to_string(n) + " sample " + std::to_string(s);
      require(o, ii == iii && ii == vi && ii == vii, "verdicts differ at " + tag);
      for (int i = 1; i <= n; ++i) {
        require(o, interior(unit(n, i), b) == lie_act(tau_map(t, unit(n, i)), t.tau()),
                "X contract b(tau^2) != (tau_X)_* tau at " + tag);
      }
      passing += ii;
      ++total;
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " samples, " + std::to_string(passing) + " PSCT";
  return o;
}

Outcome dim4_automatic() {
  Outcome o;
  Rng rng(4);
  for (int s = 0; s < 50; ++s) {
    const TorsionDatum t(random_form(4, 3, rng));
    require(o, interior(hodge(t.tau()).as_vector(), t.tau()).is_zero(), "theta contract tau != 0");
    require(o, psct_certificate(t).passes, "certificate fails");
  }
  if (o.ok) o.detail = "50 samples";
  return o;
}

Outcome catalog_closedness() {
  Outcome o;
  for (const std::string& name : catalog_algebras()) {
    const MetricLieAlgebra L = matrix_model(name);
    const KForm sigma = canonical_three_form(L);
    require(o, ce_differential(L, sigma).is_zero(), "d(sigma) != 0 for " + name);
    require(o, bianchi_b_tau_squared(TorsionDatum(sigma)).is_zero(), "b(sigma^2) != 0 for " + name);
  }
  if (o.ok) o.detail = std::to_string(catalog_algebras().size()) + " algebras";
  return o;
}

std::optional<std::vector<int>> balanced_by_exhaustion(const std::vector<IntVector>& roots) {
  const std::size_t n = roots.size();
  if (n == 0) return std::vector<int>{};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n - 1)); ++code) {
    std::vector<int> signs(n, 1);
    for (std::size_t i = 1; i < n; ++i) {
      if ((code >> (n - 1 - i)) & 1) signs[i] = -1;
    }
    IntVector sum(roots[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += signs[i] * roots[i][c];
    }
    if (std::all_of(sum.begin(), sum.end(), [](long x) { return x == 0; })) return signs;
  }
  return std::nullopt;
}

Outcome root_combinatorics() {
  Outcome o;
  const std::vector<std::tuple<char, int, std::size_t>> table{{'A', 1, 1}, {'A', 2, 3}, {'A', 3, 6}, {'A', 4, 10},
                                                              {'B', 2, 4}, {'B', 3, 9}, {'C', 2, 4}, {'C', 3, 9},
                                                              {'D', 4, 12}, {'G', 2, 6}};
  for (auto [type, rank, count] : table) {
    require(o, positive_roots(type, rank).size() == count,
            std::string(1, type) + std::to_string(rank) + " has the wrong root count");
  }
  for (char type : {'A', 'B'}) {
    const RootSystem R = positive_roots(type, 2);
    for (std::uint32_t m = 0; m < (1u << R.size()); ++m) {
      std::vector<IntVector> subset;
      for (std::size_t i = 0; i < R.size(); ++i) {
        if ((m >> i) & 1) subset.push_back(R.positive[i]);
      }
      require(o, is_balanced(subset).has_value() == balanced_by_exhaustion(subset).has_value(),
              std::string(1, type) + "2 subset " + std::to_string(m) + " disagrees with exhaustion");
    }
  }
  WellBalancedOptions forbid;
  forbid.forbid_singleton_complement = true;
  require(o, well_balanced_search(positive_roots('B', 2), forbid).empty(), "B2 search is not empty");
  const auto a2 = well_balanced_search(positive_roots('A', 2), forbid);
  require(o,
          std::any_of(a2.begin(), a2.end(), [](const WellBalancedResult& w) { return w.S.size() == 3 && w.complement.empty(); }),
          "A2 search lacks S = R+");
  for (int k = 1; k <= 3; ++k) {
    require(o, is_balanced(positive_roots('A', 2 * k).positive).has_value(), "A" + std::to_string(2 * k) + " not balanced");
  }
  return o;
}

Outcome semikaehler() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> cases{{"su(3)", "well-balanced"},
                                                               {"su(2) + su(2)", "well-balanced"},
                                                               {"su(5)", "well-balanced"},
                                                               {"so(5)", "so(5)"},
                                                               {"su(3) + so(5)", "so(5)"}};
  for (const auto& [name, path] : cases) {
    const MetricLieAlgebra L = matrix_model(name);
    const SemiKaehlerConstruction c = semikaehler_structure(L);
    require(o, c.path == path, name + " took the " + c.path + " path");
    require(o, w4_vector(TorsionDatum(canonical_three_form(L)), c.J).is_zero(), "omega contract sigma != 0 for " + name);
  }
  Rng rng(6);
  for (int s = 0; s < 20; ++s) {
    require(o, !determinant(lefschetz_matrix(random_almost_hermitian(4, rng))).is_zero(), "singular Lefschetz map");
  }
  require(o, !canonical_three_form(matrix_model("su(2) + R")).is_zero(), "sigma of su(2) + R vanishes");
  return o;
}

Outcome uniqueness() {
  Outcome o;
  const std::vector<std::tuple<std::string, SubalgebraBasis, std::size_t>> cases{
      {"u(2)", unitary_algebra(AlmostHermitian::standard(4)), 0},
      {"u(3)", unitary_algebra(AlmostHermitian::standard(6)), 0},
      {"sp(2)+sp(1)", quaternionic_algebra(2), 0},
      {"so(4)", full_so(4), 4},
  };
  std::string dims;
  for (const auto& [name, h, expected] : cases) {
    const std::size_t got = skew_torsion_in(h).size();
    require(o, got == expected, name + ": dim " + std::to_string(got) + ", expected " + std::to_string(expected));
    dims += (dims.empty() ? "" : ", ") + name + " -> " + std::to_string(got);
  }
  if (o.ok) o.detail = dims;
  return o;
}

Outcome decomposition() {
  Outcome o;
  const KForm tau = KForm::monomial(6, {1, 2, 3}, 1) + KForm::monomial(6, {4, 5, 6}, 2);
  const FactorReport r = psct_factorization(TorsionDatum(tau));
  require(o, r.factors.size() == 2, "expected two factors for sigma(su(2)) + 2 vol3");
  KForm sum(6, 3);
  for (const Factor& f : r.factors) {
    require(o, f.subspace.size() == 3, "factor is not 3-dimensional");
    sum += f.tau_restricted;
  }
  require(o, sum == tau, "factors do not reassemble tau");

  const FactorReport s = psct_factorization(TorsionDatum(canonical_three_form(matrix_model("su(2) + su(2)"))));
  require(o, s.factors.size() == 2, "su(2) + su(2) does not split in two");
  for (const Factor& f : s.factors) require(o, f.kind == FactorKind::SimpleCompact, "su(2) + su(2) factor not SIMPLE_COMPACT");

  std::vector<KForm> forms{tau, canonical_three_form(matrix_model("su(2) + su(2)")),
                           canonical_three_form(matrix_model("su(3)")), g2_form(),
                           KForm::monomial(7, {1, 2, 3}, 1) + KForm::monomial(7, {4, 5, 6}, -3)};
  std::size_t checked = 0;
  for (const KForm& f : forms) {
    const TorsionDatum t(f);
    for (const SubalgebraBasis& h : {generated_algebra(t), stabilizer(t)}) {
      for (const Subspace& W : invariant_splitting(h)) {
        require(o, is_irreducible(h, W), "splitting piece is reducible");
        ++checked;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " splitting pieces re-checked";
  return o;
}

Outcome samelson() {
  Outcome o;
  const MetricLieAlgebra L = matrix_model("su(3)");
  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  const AlmostHermitian J = samelson_J(L, rd);
  const Vector sum = positive_root_sum(rd);
  require(o, is_integrable(L, J), "Nijenhuis tensor is nonzero");
  require(o, !sum.is_zero(), "sum of positive roots vanishes");
  // tau = -sigma/2 is the torsion of the flat (-)-connection the argument uses.
  const TorsionDatum tau(Scalar::fraction(-1, 2) * canonical_three_form(L));
  require(o, w4_vector(tau, J) == Scalar::fraction(-1, 2) * sum, "omega contract tau != -(sum of roots)/2");
  require(o, w4_vector(TorsionDatum(canonical_three_form(L)), J) == sum, "omega contract sigma != sum of roots");
  return o;
}

Outcome stabilizers() {
  Outcome o;
  require(o, stabilizer(TorsionDatum(g2_form())).size() == 14, "dim stab(G2 form) != 14");
  require(o, stabilizer(TorsionDatum(KForm::volume(3))).size() == 3, "dim stab(vol3) != 3");
  for (int n = 3; n <= 7; ++n) {
    require(o, stabilizer(TorsionDatum(KForm(n, 3))).size() == static_cast<std::size_t>(n * (n - 1) / 2),
            "dim stab(0) wrong for n = " + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace psct

int main() {
  using namespace psct;
  const std::vector<Criterion> criteria{
      {1, "so(5) golden replication", kBudgetSo5, so5_golden},
      {2, "PSCT condition equivalences", kBudgetEquivalence, condition_equivalence},
      {3, "dimension 4 is automatically PSCT", 0, dim4_automatic},
      {4, "catalog closedness", 0, catalog_closedness},
      {5, "root combinatorics", 0, root_combinatorics},
      {6, "semi-Kaehler construction", 0, semikaehler},
      {7, "uniqueness intersections", kBudgetUniqueness, uniqueness},
      {8, "decomposition", 0, decomposition},
      {9, "Samelson structure on su(3)", 0, samelson},
      {10, "stabilizer dimensions", 0, stabilizers},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs >= c.budget) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    failures += !o.ok;
    std::printf("%s %2d %s (%.2f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget > 0 ? (", budget " + std::to_string(static_cast<int>(c.budget)) + " s").c_str() : "",
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
