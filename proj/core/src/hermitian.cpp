#include "psct/hermitian.hpp"

#include <algorithm>
#include <utility>

namespace psct {

namespace {

Matrix square(const Matrix& m) { return m * m; }

// J a = b and J b = -a.
void add_rotation(Matrix& J, const Vector& a, const Vector& b) {
  const std::size_t n = J.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].is_zero() && b[r].is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (!b[r].is_zero() && !a[c].is_zero()) J(r, c) += b[r] * a[c];
      if (!a[r].is_zero() && !b[c].is_zero()) J(r, c) -= a[r] * b[c];
    }
  }
}

Scalar max_abs(const Vector& v) {
  Scalar m;
  for (const Scalar& x : v) {
    Scalar a = x.abs();
    if (a > m) m = a;
  }
  return m;
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

std::size_t pair_index(int n, int i, int j) {
  // Position of (i, j), i < j, in the lexicographic list of pairs.
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

bool in_block(const Vector& v, int offset, int dim) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const int c = static_cast<int>(i);
    if (!v[i].is_zero() && (c < offset || c >= offset + dim)) return false;
  }
  return true;
}

void require_orthonormal(const Subspace& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a; b < t.size(); ++b) {
      if (dot(t.basis[a], t.basis[b]) != Scalar(a == b ? 1 : 0)) {
        throw DomainError("Cartan basis must be orthonormal");
      }
    }
  }
}

void add_cartan_structure(Matrix& J, const Subspace& t, const AlmostHermitian& J_t) {
  if (J_t.dim() != static_cast<int>(t.size())) throw DimensionError("J_t does not match the Cartan dimension");
  const Matrix& M = J_t.matrix();
  const std::size_t n = J.rows();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (M(a, b).is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (t.basis[a][r].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (!t.basis[b][c].is_zero()) J(r, c) += M(a, b) * t.basis[a][r] * t.basis[b][c];
        }
      }
    }
  }
}

void add_signed_roots(Matrix& J, const RootDecomp& rd, const std::vector<std::size_t>& S,
                      const std::vector<int>& signs) {
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Root& r = rd.roots.at(S[i]);
    if (signs[i] > 0) {
      add_rotation(J, r.x, r.y);
    } else {
      add_rotation(J, r.y, r.x);
    }
  }
}

void add_pairing(Matrix& J, const RootDecomp& rd, std::vector<std::size_t> C) {
  std::stable_sort(C.begin(), C.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = rd.roots[a].alpha;
    const auto& y = rd.roots[b].alpha;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::size_t start = 0;
  if (C.size() % 2 == 1) {
    if (C.size() < 3) throw DomainError("a single complement root space admits no compatible J'");
    const Root& r1 = rd.roots[C[0]];
    const Root& r2 = rd.roots[C[1]];
    const Root& r3 = rd.roots[C[2]];
    add_rotation(J, r1.x, r2.x);
    add_rotation(J, r1.y, r3.x);
    add_rotation(J, r2.y, r3.y);
    start = 3;
  }
  for (std::size_t i = start; i + 1 < C.size(); i += 2) {
    const Root& a = rd.roots[C[i]];
    const Root& b = rd.roots[C[i + 1]];
    add_rotation(J, a.x, b.x);
    add_rotation(J, a.y, b.y);
  }
}

void require_semikaehler(const MetricLieAlgebra& L, const AlmostHermitian& J) {
  const Vector w = w4_vector(TorsionDatum(canonical_three_form(L)), J);
  if (!w.is_zero()) throw InconsistencyError("constructed J does not satisfy omega ⌟ sigma = 0");
}

std::vector<IntVector> roots_at(const RootSystem& R, const std::vector<std::size_t>& S) {
  std::vector<IntVector> out;
  for (std::size_t i : S) out.push_back(R.positive[i]);
  return out;
}

void standard_pairs(Matrix& J, const std::vector<Vector>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) add_rotation(J, vs[i], vs[i + 1]);
}

}  // namespace

AlmostHermitian::AlmostHermitian(SkewEndo J) : J_(std::move(J)) {
  const int n = J_.dim();
  if (n % 2 != 0) throw DomainError("almost Hermitian structures need even dimension");
  if (!J_.matrix().is_skew()) throw DomainError("J is not skew");
  if (!(square(J_.matrix()) == -Matrix::identity(static_cast<std::size_t>(n)))) throw DomainError("J^2 != -I");
}

AlmostHermitian AlmostHermitian::standard(int n) {
  if (n < 0 || n % 2 != 0) throw DomainError("almost Hermitian structures need even dimension");
  Matrix J(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; i += 2) {
    J(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = 1;
    J(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = -1;
  }
  return AlmostHermitian(SkewEndo(J));
}

KForm fundamental_form(const AlmostHermitian& J) { return J.J().to_form(); }

AlmostHermitian random_almost_hermitian(int n, Rng& rng) {
  Matrix Q = random_rotation(n, rng);
  return AlmostHermitian(SkewEndo(Q * AlmostHermitian::standard(n).matrix() * Q.transpose()));
}

Vector w4_vector(const TorsionDatum& t, const AlmostHermitian& J) {
  require_same_dim(t.dim(), J.dim(), "w4_vector");
  return contract(fundamental_form(J), t.tau()).as_vector();
}

Vector codifferential(const TorsionDatum& t, const AlmostHermitian& J) {
  require_same_dim(t.dim(), J.dim(), "codifferential");
  const std::size_t n = static_cast<std::size_t>(t.dim());
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = Vector::unit(n, i);
    const Matrix Ti = tau_map(t, e).matrix();
    out += (Ti * J.matrix() - J.matrix() * Ti) * e;
  }
  return out;
}

KForm w1_projection(const KForm& tau, const AlmostHermitian& J) {
  require_same_dim(tau.dim(), J.dim(), "w1_projection");
  if (tau.degree() != 3) throw DimensionError("w1_projection expects a 3-form");
  const int n = tau.dim();
  std::vector<Vector> e, Je;
  for (int i = 0; i < n; ++i) {
    e.push_back(Vector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
    Je.push_back(J.matrix().col(static_cast<std::size_t>(i)));
  }
  KForm out(n, 3);
  const Scalar quarter = Scalar::fraction(1, 4);
  for (Mask m : subsets(n, 3)) {
    auto idx = mask_indices(m);
    const auto x = static_cast<std::size_t>(idx[0]);
    const auto y = static_cast<std::size_t>(idx[1]);
    const auto z = static_cast<std::size_t>(idx[2]);
    Scalar v = tau.coeff(m) - tau.evaluate({Je[x], Je[y], e[z]}) - tau.evaluate({Je[x], e[y], Je[z]}) -
               tau.evaluate({e[x], Je[y], Je[z]});
    if (!v.is_zero()) out.add_term(m, quarter * v);
  }
  return out;
}

KForm w4_reconstruction(const Vector& theta, const AlmostHermitian& J) {
  require_same_dim(static_cast<int>(theta.dim()), J.dim(), "w4_reconstruction");
  const int m = J.dim() / 2;
  if (m < 2) return KForm(J.dim(), 3);
  return Scalar::fraction(1, m - 1) * wedge(KForm::one_form(theta), fundamental_form(J));
}

GrayHervellaReport gh_components(const TorsionDatum& t, const AlmostHermitian& J, const MetricLieAlgebra* bracket) {
  require_same_dim(t.dim(), J.dim(), "gh_components");
  GrayHervellaReport r;
  r.w1_part = w1_projection(t.tau(), J);
  r.w4_vector = w4_vector(t, J);
  r.w4_part = w4_reconstruction(r.w4_vector, J);
  r.w3_part = t.tau() - r.w1_part - r.w4_part;
  if (bracket) r.nijenhuis_zero = is_integrable(*bracket, J);
  if (!r.w1_part.is_zero()) r.class_label.push_back("W1");
  if (!r.w3_part.is_zero()) r.class_label.push_back("W3");
  if (!r.w4_vector.is_zero()) r.class_label.push_back("W4");
  return r;
}

std::vector<KForm> nijenhuis(const MetricLieAlgebra& L, const AlmostHermitian& J) {
  require_same_dim(L.dim(), J.dim(), "nijenhuis");
  const int n = L.dim();
  const auto un = static_cast<std::size_t>(n);
  std::vector<KForm> slices(un, KForm(n, 2));
  for (int i = 0; i < n; ++i) {
    const Vector ei = Vector::unit(un, static_cast<std::size_t>(i));
    const Vector Jei = J.apply(ei);
    for (int j = i + 1; j < n; ++j) {
      const Vector ej = Vector::unit(un, static_cast<std::size_t>(j));
      const Vector Jej = J.apply(ej);
      Vector N = L.bracket(Jei, Jej) - L.bracket(i, j) - J.apply(L.bracket(Jei, ej)) - J.apply(L.bracket(ei, Jej));
      const Mask m = (Mask{1} << i) | (Mask{1} << j);
      for (std::size_t k = 0; k < un; ++k) {
        if (!N[k].is_zero()) slices[k].add_term(m, N[k]);
      }
    }
  }
  return slices;
}

bool is_integrable(const MetricLieAlgebra& L, const AlmostHermitian& J) {
  for (const KForm& s : nijenhuis(L, J)) {
    if (!s.is_zero()) return false;
  }
  return true;
}

W1W4Residual w1w4_residual(const TorsionDatum& t, const AlmostHermitian& J) {
  require_same_dim(t.dim(), J.dim(), "w1w4_residual");
  const int n = t.dim();
  if (n < 6) throw DomainError("the W1+W4 identity needs dimension at least 6");
  const int m = n / 2;
  const auto un = static_cast<std::size_t>(n);
  const KForm omega = fundamental_form(J);
  const Vector w = w4_vector(t, J);
  const Scalar scale = Scalar::fraction(1, m - 1);
  W1W4Residual out;
  auto check = [&](const Vector& X, int a, int b) {
    const Vector JX = J.apply(X);
    const Vector lhs = tau_map(t, X).apply(JX);
    const Scalar pX = inner(interior(X, t.tau()), omega);
    const Scalar pJX = inner(interior(JX, t.tau()), omega);
    const Vector rhs = scale * (X.norm2() * w - pX * X - pJX * JX);
    const Scalar r = max_abs(lhs - rhs);
    if (r > out.residual) {
      out.residual = r;
      out.witness = {a + 1, b + 1};
    }
  };
  for (int a = 0; a < n; ++a) check(Vector::unit(un, static_cast<std::size_t>(a)), a, a);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      check(Vector::unit(un, static_cast<std::size_t>(a)) + Vector::unit(un, static_cast<std::size_t>(b)), a, b);
    }
  }
  return out;
}

Matrix lefschetz_matrix(const AlmostHermitian& J) {
  const int n = J.dim();
  const KForm omega = fundamental_form(J);
  const auto masks = subsets(n, 3);
  Matrix out(static_cast<std::size_t>(n), masks.size());
  for (std::size_t c = 0; c < masks.size(); ++c) {
    KForm e(n, 3);
    e.add_term(masks[c], 1);
    const Vector v = contract(omega, e).as_vector();
    for (std::size_t r = 0; r < v.dim(); ++r) out(r, c) = v[r];
  }
  return out;
}

RootSystem root_system_of(const RootDecomp& rd) {
  const std::size_t N = rd.roots.size();
  std::vector<Vector> alpha;
  for (const Root& r : rd.roots) alpha.emplace_back(r.alpha);
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < N; ++i) {
    bool decomposable = false;
    for (std::size_t a = 0; a < N && !decomposable; ++a) {
      for (std::size_t b = a; b < N && !decomposable; ++b) decomposable = alpha[a] + alpha[b] == alpha[i];
    }
    if (!decomposable) simple.push_back(i);
  }
  const std::size_t r = rd.cartan.size();
  std::vector<Vector> cols;
  for (std::size_t s : simple) cols.push_back(alpha[s]);
  const Matrix A = Matrix::from_columns(cols, r);
  RootSystem R;
  R.ambient = static_cast<int>(simple.size());
  for (std::size_t i = 0; i < N; ++i) {
    auto c = solve(A, alpha[i]);
    if (!c) throw InconsistencyError("root is not in the span of the simple roots");
    IntVector v;
    for (const Scalar& x : *c) {
      if (!x.is_rational() || x.rational_part().get_den() != 1 || x.sign() < 0 || !x.rational_part().get_num().fits_slong_p()) {
        throw InconsistencyError("root has a non-integral simple-root expansion");
      }
      v.push_back(x.rational_part().get_num().get_si());
    }
    R.positive.push_back(std::move(v));
  }
  R.component_of.assign(N, -1);
  for (std::size_t s = 0; s < N; ++s) {
    if (R.component_of[s] >= 0) continue;
    const int label = static_cast<int>(R.components.size());
    std::vector<std::size_t> stack{s};
    R.component_of[s] = label;
    int rank = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (std::find(simple.begin(), simple.end(), v) != simple.end()) ++rank;
      for (std::size_t w = 0; w < N; ++w) {
        if (R.component_of[w] < 0 && !is_strongly_orthogonal({v, w}, R)) {
          R.component_of[w] = label;
          stack.push_back(w);
        }
      }
    }
    R.components.emplace_back('X', rank);
  }
  return R;
}

AlmostHermitian standard_cartan_structure(const RootDecomp& rd) {
  return AlmostHermitian::standard(static_cast<int>(rd.cartan.size()));
}

AlmostHermitian build_semikaehler_J(const MetricLieAlgebra& L, const RootDecomp& rd, const WellBalancedResult& wb,
                                    const AlmostHermitian& J_t) {
  const int n = L.dim();
  if (rd.cartan.dim != n) throw DimensionError("root decomposition belongs to another dimension");
  if (rd.cartan.size() % 2 != 0) throw DomainError("the Cartan subalgebra has odd dimension");
  require_orthonormal(rd.cartan);
  if (wb.complement.size() == 1) throw DomainError("a singleton complement admits no compatible J'");
  const RootSystem R = root_system_of(rd);
  if (!verify_well_balanced(R, wb, true)) throw DomainError("subset is not well-balanced for these roots");

  Matrix M(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  add_cartan_structure(M, rd.cartan, J_t);
  add_signed_roots(M, rd, wb.S, wb.signs);
  add_pairing(M, rd, wb.complement);
  AlmostHermitian J{SkewEndo(M)};

  for (std::size_t c : wb.complement) {
    const Root& r = rd.roots[c];
    for (const Vector* v : {&r.x, &r.y}) {
      const Vector Jv = J.apply(*v);
      if (!dot(Jv, r.x).is_zero() || !dot(Jv, r.y).is_zero()) {
        throw InconsistencyError("J' does not move a complement root space off itself");
      }
    }
  }
  require_semikaehler(L, J);
  return J;
}

SemiKaehlerConstruction semikaehler_structure(const MetricLieAlgebra& L) {
  const int n = L.dim();
  if (n % 2 != 0) throw DomainError("semi-Kähler structures need even dimension");
  const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
  const RootSystem R = root_system_of(rd);
  WellBalancedOptions options;
  options.cap_roots = std::max<std::size_t>(R.size(), options.cap_roots);
  options.cap_results = 1;
  auto found = well_balanced_search(R, options);
  if (!found.empty()) {
    return {build_semikaehler_J(L, rd, found.front(), standard_cartan_structure(rd)), "well-balanced", found.front()};
  }

  std::vector<const LieFactor*> so3, so5;
  for (const LieFactor& f : L.factors()) {
    if (f.family == LieFamily::Abelian) continue;
    if (f.dim == 3) {
      so3.push_back(&f);
    } else if (f.family == LieFamily::Orthogonal && f.k == 5) {
      so5.push_back(&f);
    } else if (f.family != LieFamily::SpecialUnitary || f.k % 2 == 0) {
      throw DomainError("no semi-Kähler construction implemented for " + L.name());
    }
  }
  const std::size_t un = static_cast<std::size_t>(n);
  Matrix M(un, un);
  auto others = [&](const LieFactor& f) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < rd.roots.size(); ++i) {
      if (!in_block(rd.roots[i].x, f.offset, f.dim)) S.push_back(i);
    }
    auto signs = is_balanced(roots_at(R, S));
    if (!signs) throw DomainError("the remaining roots of " + L.name() + " are not balanced");
    add_signed_roots(M, rd, S, *signs);
  };

  if (so3.size() == 1 && so5.empty()) {
    const LieFactor& f = *so3.front();
    std::vector<Vector> rest;
    for (const Vector& t : rd.cartan.basis) {
      if (!in_block(t, f.offset, f.dim)) rest.push_back(t);
    }
    if (rest.size() < 3) throw DomainError(L.name() + " admits no semi-Kähler structure");
    for (int i = 0; i < 3; ++i) {
      add_rotation(M, Vector::unit(un, static_cast<std::size_t>(f.offset + i)), rest[static_cast<std::size_t>(i)]);
    }
    standard_pairs(M, std::vector<Vector>(rest.begin() + 3, rest.end()));
    others(f);
    AlmostHermitian J{SkewEndo(M)};
    require_semikaehler(L, J);
    return {J, "so(3)", std::nullopt};
  }
  if (so5.size() == 1 && so3.empty()) {
    const LieFactor& f = *so5.front();
    standard_pairs(M, rd.cartan.basis);
    others(f);
    const auto x = so5_x_basis(n, f.offset);
    add_rotation(M, x[0], x[6]);
    add_rotation(M, x[1], x[5]);
    add_rotation(M, x[2], x[7]);
    add_rotation(M, x[3], x[4]);
    AlmostHermitian J{SkewEndo(M)};
    require_semikaehler(L, J);
    return {J, "so(5)", std::nullopt};
  }
  throw DomainError("no semi-Kähler construction implemented for " + L.name());
}

AlmostHermitian samelson_J(const MetricLieAlgebra& L, const RootDecomp& rd) {
  return samelson_J(L, rd, standard_cartan_structure(rd));
}

AlmostHermitian samelson_J(const MetricLieAlgebra& L, const RootDecomp& rd, const AlmostHermitian& J_t) {
  const auto n = static_cast<std::size_t>(L.dim());
  if (rd.cartan.dim != L.dim()) throw DimensionError("root decomposition belongs to another dimension");
  require_orthonormal(rd.cartan);
  Matrix M(n, n);
  add_cartan_structure(M, rd.cartan, J_t);
  for (const Root& r : rd.roots) add_rotation(M, r.x, r.y);
  return AlmostHermitian(SkewEndo(M));
}

Vector positive_root_sum(const RootDecomp& rd) {
  Vector s(static_cast<std::size_t>(rd.cartan.dim));
  for (const Root& r : rd.roots) s += rd.root_vector(r);
  return s;
}

std::array<Vector, 8> so5_x_basis(int dim, int offset) {
  const auto n = static_cast<std::size_t>(dim);
  auto u = [&](int i) { return Vector::unit(n, static_cast<std::size_t>(offset + i)); };
  const Vector Xe1 = u(2), Ye1 = u(3), Xe2 = u(4), Ye2 = u(5), Xp = u(6), Yp = u(7), Xm = u(8), Ym = u(9);
  const Scalar h = Scalar::sqrt(Scalar::fraction(1, 2));
  return {Xe1, Ye1, Xe2, Ye2, -h * (Xp + Xm), h * (Ym - Yp), -h * (Yp + Ym), h * (Xp - Xm)};
}

So5SpecialData so5_special_J() {
  const MetricLieAlgebra L = matrix_model("so(5)");
  const auto x = so5_x_basis(10, 0);
  std::vector<Vector> cols{Vector::unit(10, 0), Vector::unit(10, 1)};
  cols.insert(cols.end(), x.begin(), x.end());
  const Matrix P = Matrix::from_columns(cols, 10);

  const KForm sigma = pullback(canonical_three_form(L), P);
  auto e = [](std::vector<int> idx) { return KForm::monomial(10, idx); };
  // Coordinates: e1, e2 are 1, 2 and x_i is i + 2.
  const KForm expected = e({1, 3, 4}) + e({1, 7, 9}) + e({1, 8, 10}) + e({2, 5, 6}) + e({2, 7, 8}) + e({2, 9, 10}) +
                         e({3, 5, 7}) + e({3, 6, 8}) + e({4, 5, 9}) + e({4, 6, 10});
  const KForm j_prime = KForm::monomial(8, {1, 7}) + KForm::monomial(8, {2, 6}) + KForm::monomial(8, {3, 8}) +
                        KForm::monomial(8, {4, 5});

  Matrix M(10, 10);
  add_rotation(M, cols[0], cols[1]);
  const Matrix Jp = SkewEndo::from_form(j_prime).matrix();
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      if (Jp(a, b).is_zero()) continue;
      for (std::size_t r = 0; r < 10; ++r) {
        for (std::size_t c = 0; c < 10; ++c) M(r, c) += Jp(a, b) * x[a][r] * x[b][c];
      }
    }
  }
  return {P, sigma, expected, j_prime, AlmostHermitian(SkewEndo(M))};
}

std::vector<KForm> skew_torsion_in(const SubalgebraBasis& h) {
  const int n = h.dim;
  std::vector<Vector> coords;
  for (const SkewEndo& g : h.generators) coords.push_back(g.coords());
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::vector<Vector> perp = orthogonal_complement(coords, pairs);
  const auto triples = subsets(n, 3);
  Matrix A(static_cast<std::size_t>(n) * perp.size(), triples.size());
  for (std::size_t c = 0; c < triples.size(); ++c) {
    const auto idx = mask_indices(triples[c]);
    for (int pos = 0; pos < 3; ++pos) {
      const int i = idx[static_cast<std::size_t>(pos)];
      int rest[2];
      for (int q = 0, w = 0; q < 3; ++q) {
        if (q != pos) rest[w++] = idx[static_cast<std::size_t>(q)];
      }
      const std::size_t p = pair_index(n, rest[0], rest[1]);
      const int sign = pos == 1 ? -1 : 1;
      for (std::size_t k = 0; k < perp.size(); ++k) {
        const Scalar& v = perp[k][p];
        if (!v.is_zero()) A(static_cast<std::size_t>(i) * perp.size() + k, c) += sign * v;
      }
    }
  }
  std::vector<KForm> out;
  for (const Vector& v : nullspace(A)) {
    KForm f(n, 3);
    for (std::size_t c = 0; c < triples.size(); ++c) {
      if (!v[c].is_zero()) f.add_term(triples[c], v[c]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

SkewCommutant invariant_skew_commutant(const SubalgebraBasis& h, const std::vector<SkewEndo>& candidates) {
  const int n = h.dim;
  const auto un = static_cast<std::size_t>(n);
  const std::size_t pairs = un * (un - 1) / 2;
  SkewCommutant out;
  if (h.generators.empty()) {
    for (std::size_t p = 0; p < pairs; ++p) out.basis.push_back(SkewEndo::from_coords(n, Vector::unit(pairs, p)));
  } else {
    Matrix A(h.generators.size() * un * un, pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
      const Matrix E = SkewEndo::from_coords(n, Vector::unit(pairs, p)).matrix();
      for (std::size_t g = 0; g < h.generators.size(); ++g) {
        const Vector c = commutator(E, h.generators[g].matrix()).flatten();
        for (std::size_t r = 0; r < c.dim(); ++r) A(g * un * un + r, p) = c[r];
      }
    }
    for (const Vector& v : nullspace(A)) out.basis.push_back(SkewEndo::from_coords(n, v));
  }

  auto invariant = [&](const SkewEndo& c) {
    return std::all_of(h.generators.begin(), h.generators.end(),
                       [&](const SkewEndo& g) { return commutator(c.matrix(), g.matrix()).is_zero(); });
  };
  auto normalized = [&](const SkewEndo& c) -> std::optional<SkewEndo> {
    if (c.is_zero()) return std::nullopt;
    const Matrix sq = square(c.matrix());
    if (!sq.is_scalar_multiple_of_identity()) return std::nullopt;
    const Scalar lambda = sq(0, 0);
    if (lambda.sign() >= 0 || !lambda.is_rational()) return std::nullopt;
    return Scalar::sqrt(-lambda).inverse() * c;
  };
  std::vector<SkewEndo> family;
  for (const SkewEndo& c : candidates) {
    if (c.dim() == n && invariant(c)) family.push_back(c);
  }
  family.insert(family.end(), out.basis.begin(), out.basis.end());
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < out.basis.size(); ++b) {
      family.push_back(out.basis[a] + out.basis[b]);
      family.push_back(out.basis[a] - out.basis[b]);
    }
  }
  for (const SkewEndo& c : family) {
    if (auto J = normalized(c)) {
      out.complex_structure = *J;
      break;
    }
  }
  return out;
}

SubalgebraBasis unitary_algebra(const AlmostHermitian& J) {
  SubalgebraBasis h{J.dim(), {J.J()}, true};
  return SubalgebraBasis{J.dim(), invariant_skew_commutant(h).basis, true};
}

std::array<SkewEndo, 3> quaternionic_structure(int q) {
  if (q < 1) throw DomainError("quaternionic dimension must be positive");
  const auto n = static_cast<std::size_t>(4 * q);
  Matrix Ri(n, n), Rj(n, n), Rk(n, n);
  for (std::size_t b = 0; b < n; b += 4) {
    // x -> x i: 1 -> i, i -> -1, j -> -k, k -> j.
    Ri(b + 1, b) = 1;
    Ri(b, b + 1) = -1;
    Ri(b + 3, b + 2) = -1;
    Ri(b + 2, b + 3) = 1;
    // x -> x j: 1 -> j, i -> k, j -> -1, k -> -i.
    Rj(b + 2, b) = 1;
    Rj(b + 3, b + 1) = 1;
    Rj(b, b + 2) = -1;
    Rj(b + 1, b + 3) = -1;
    // x -> x k: 1 -> k, i -> -j, j -> i, k -> -1.
    Rk(b + 3, b) = 1;
    Rk(b + 2, b + 1) = -1;
    Rk(b + 1, b + 2) = 1;
    Rk(b, b + 3) = -1;
  }
  return {SkewEndo(Ri), SkewEndo(Rj), SkewEndo(Rk)};
}

SubalgebraBasis quaternionic_algebra(int q) {
  const auto R = quaternionic_structure(q);
  SubalgebraBasis right{4 * q, {R[0], R[1], R[2]}, true};
  SubalgebraBasis h{4 * q, invariant_skew_commutant(right).basis, true};
  for (const SkewEndo& r : R) h.generators.push_back(r);
  return h;
}

}  // namespace psct
