#include "psct/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "psct/errors.hpp"
#include "psct/polynomial.hpp"

namespace psct {

Subspace Subspace::whole(int n) {
  Subspace s;
  s.dim = n;
  for (int i = 0; i < n; ++i) s.basis.push_back(Vector::unit(n, i));
  return s;
}

Matrix Subspace::projector() const {
  if (basis.empty()) return Matrix(dim, dim);
  Matrix B = Matrix::from_columns(basis, dim);
  Matrix Bt = B.transpose();
  auto inv = inverse(Bt * B);
  if (!inv) throw DomainError("subspace basis is linearly dependent");
  return B * *inv * Bt;
}

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Abelian:
      return "ABELIAN";
    case FactorKind::SimpleCompact:
      return "SIMPLE_COMPACT";
    case FactorKind::ThreeDimVol:
      return "THREE_DIM_VOL";
    case FactorKind::Unrecognized:
      return "UNRECOGNIZED";
  }
  return "UNRECOGNIZED";
}

namespace {

// An orthogonal basis of W together with the generators written in it.
struct Restricted {
  std::vector<Vector> basis;
  std::vector<Scalar> norms;
  std::vector<Matrix> gens;

  std::size_t dim() const { return basis.size(); }

  std::optional<Vector> coords(const Vector& v) const {
    Vector c(basis.size());
    Vector back(v.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      c[k] = dot(v, basis[k]) / norms[k];
      if (!c[k].is_zero()) back += c[k] * basis[k];
    }
    if (back != v) return std::nullopt;
    return c;
  }

  Vector ambient(const Vector& c) const {
    Vector v(basis.front().dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!c[k].is_zero()) v += c[k] * basis[k];
    }
    return v;
  }
};

Restricted restrict_to(const std::vector<Matrix>& gens, const std::vector<Vector>& W) {
  Restricted r;
  r.basis = gram_schmidt(W);
  for (const auto& b : r.basis) r.norms.push_back(b.norm2());
  for (const auto& G : gens) {
    Matrix R(r.dim(), r.dim());
    for (std::size_t j = 0; j < r.dim(); ++j) {
      auto c = r.coords(G * r.basis[j]);
      if (!c) throw DomainError("subspace is not invariant under the generators");
      for (std::size_t i = 0; i < r.dim(); ++i) R(i, j) = (*c)[i];
    }
    r.gens.push_back(std::move(R));
  }
  return r;
}

// Self-adjoint operators on W (in W coordinates) commuting with the restricted
// generators. Writing A = D^{-1} S with D the Gram matrix, S is symmetric and
// the conditions read S R = (D R D^{-1}) S.
std::vector<Matrix> commutant_in(const Restricted& r) {
  const std::size_t d = r.dim();
  std::vector<std::vector<std::size_t>> idx(d, std::vector<std::size_t>(d));
  std::size_t m = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) idx[i][j] = idx[j][i] = m++;
  }
  SpanBuilder rows(m);
  for (const auto& R : r.gens) {
    if (rows.dim() + 1 == m) break;
    Matrix Rp(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!R(i, k).is_zero()) Rp(i, k) = r.norms[i] * R(i, k) / r.norms[k];
      }
    }
    for (std::size_t i = 0; i < d && rows.dim() + 1 < m; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Vector eq(m);
        for (std::size_t k = 0; k < d; ++k) {
          if (!R(k, j).is_zero()) eq[idx[i][k]] += R(k, j);
          if (!Rp(i, k).is_zero()) eq[idx[k][j]] -= Rp(i, k);
        }
        if (!eq.is_zero()) rows.insert(eq);
      }
    }
  }
  std::vector<Vector> sols;
  if (rows.dim() == 0) {
    for (std::size_t k = 0; k < m; ++k) sols.push_back(Vector::unit(m, k));
  } else {
    sols = nullspace(Matrix::from_rows(rows.added(), m));
  }
  std::vector<Matrix> out;
  for (const auto& s : sols) {
    Matrix A(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& v = s[idx[i][j]];
        if (!v.is_zero()) A(i, j) = v / r.norms[i];
      }
    }
    out.push_back(std::move(A));
  }
  return out;
}

Vector leading_one(Vector v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) {
      Scalar inv = v[i].inverse();
      v *= inv;
      break;
    }
  }
  return v;
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.dim();
}

bool lex_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) {
      if (a[i].is_zero() != b[i].is_zero()) return !a[i].is_zero();
      return a[i] < b[i];
    }
  }
  return false;
}

std::vector<std::vector<Vector>> split(const std::vector<Matrix>& gens, const std::vector<Vector>& W, std::size_t n) {
  Restricted r = restrict_to(gens, W);
  bool trivial = std::all_of(r.gens.begin(), r.gens.end(), [](const Matrix& g) { return g.is_zero(); });
  if (trivial) {
    std::vector<std::vector<Vector>> lines;
    for (const auto& b : r.basis) lines.push_back({leading_one(b)});
    return lines;
  }
  auto comm = commutant_in(r);
  if (comm.size() <= 1) return {canonical_basis(W, n)};

  std::vector<Matrix> candidates;
  for (const auto& A : comm) {
    if (!A.is_scalar_multiple_of_identity()) candidates.push_back(A);
  }
  for (std::size_t i = 0; i < comm.size(); ++i) {
    for (std::size_t j = i + 1; j < comm.size(); ++j) candidates.push_back(comm[i] + Scalar(static_cast<long>(j + 1)) * comm[j]);
  }
  for (const auto& A : candidates) {
    auto mp = minimal_polynomial(A);
    if (!mp) continue;
    auto factors = irreducible_factors(*mp);
    if (factors.size() < 2) continue;
    std::vector<std::vector<Vector>> out;
    for (const auto& f : factors) {
      std::vector<Vector> piece;
      for (const auto& c : nullspace(evaluate(f, A))) piece.push_back(r.ambient(c));
      for (auto& sub : split(gens, canonical_basis(piece, n), n)) out.push_back(std::move(sub));
    }
    return out;
  }
  throw InconsistencyError("symmetric commutant is not scalar but no rational splitting was found");
}

std::vector<Subspace> to_sorted_subspaces(std::vector<std::vector<Vector>> pieces, int n) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    std::size_t fa = first_nonzero(a.front()), fb = first_nonzero(b.front());
    if (fa != fb) return fa < fb;
    return lex_less(a.front(), b.front());
  });
  std::vector<Subspace> out;
  for (auto& p : pieces) out.push_back(Subspace{n, std::move(p)});
  return out;
}

std::vector<Matrix> generator_matrices(const SubalgebraBasis& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens.generators) out.push_back(g.matrix());
  return out;
}

std::string three_dim_detail() {
  return "3-dimensional factor with tau proportional to the volume form: as a metric Lie algebra it is su(2), "
         "so the simple compact and 3-dimensional volume cases overlap. Tangent data cannot tell a compact "
         "group, its noncompact dual or the flat model apart, nor whether hol(nabla^tau) is 0, u(1) or so(3) "
         "(round 3-sphere, non-round alpha-Sasaki, generic).";
}

void type_factor(const TorsionDatum& t, Factor& f) {
  Restricted r = restrict_to({}, f.subspace.basis);
  const std::size_t d = r.dim();
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    SkewEndo ti = tau_map(t, r.basis[i]);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = r.coords(ti.apply(r.basis[j]));
      if (!c) throw InconsistencyError("factor is not closed under the torsion bracket");
      for (std::size_t k = 0; k < d; ++k) ad[i](k, j) = (*c)[k];
    }
  }
  Matrix killing(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) killing(i, j) = killing(j, i) = (ad[i] * ad[j]).trace();
  }
  f.killing = inertia(killing);

  bool simple = true;
  for (std::size_t i = 0; i < d && simple; ++i) {
    SpanBuilder ideal(d);
    ideal.insert(Vector::unit(d, i));
    for (std::size_t q = 0; q < ideal.added().size(); ++q) {
      Vector u = ideal.added()[q];
      for (std::size_t j = 0; j < d; ++j) ideal.insert(ad[j] * u);
    }
    simple = ideal.dim() == d;
  }
  std::ostringstream os;
  if (!simple) {
    f.kind = FactorKind::Unrecognized;
    os << "irreducible factor of dimension " << d << " whose torsion bracket has a proper ideal";
  } else if (d == 3) {
    f.kind = FactorKind::SimpleCompact;
    f.also = {FactorKind::ThreeDimVol};
    os << three_dim_detail();
  } else {
    f.kind = FactorKind::SimpleCompact;
    os << "simple compact metric Lie algebra of dimension " << d << ", Killing signature (" << f.killing.positive
       << "," << f.killing.zero << "," << f.killing.negative << "). Tangent data is shared by the compact group H, "
       << "its noncompact dual and the flat model; the isomorphism type is not named.";
  }
  f.detail = os.str();
}

}  // namespace

std::vector<Matrix> symmetric_commutant(const SubalgebraBasis& gens) {
  return commutant_in(restrict_to(generator_matrices(gens), Subspace::whole(gens.dim).basis));
}

bool is_irreducible(const SubalgebraBasis& gens, const Subspace& W) {
  if (W.basis.empty()) return false;
  return commutant_in(restrict_to(generator_matrices(gens), W.basis)).size() == 1;
}

std::vector<Subspace> invariant_splitting(const SubalgebraBasis& gens) {
  const int n = gens.dim;
  if (n == 0) return {};
  return to_sorted_subspaces(split(generator_matrices(gens), Subspace::whole(n).basis, n), n);
}

FactorReport psct_factorization(const TorsionDatum& t) {
  PsctCertificate cert = psct_certificate(t);
  if (!cert.passes) {
    std::ostringstream os;
    os << "torsion is not PSCT";
    if (cert.jacobi_defect_witness) {
      const auto& w = *cert.jacobi_defect_witness;
      os << ": Jacobi fails on (e" << w[0] << ", e" << w[1] << ", e" << w[2] << ")";
    }
    throw DomainError(os.str());
  }
  const int n = t.dim();
  FactorReport report;
  report.kernel_factor.dim = n;
  for (const auto& v : kernel(t).vectors) report.kernel_factor.basis.push_back(leading_one(v));

  std::vector<Vector> complement = canonical_basis(orthogonal_complement(report.kernel_factor.basis, n), n);
  if (complement.empty()) return report;

  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    SkewEndo ti = tau_map(t, Vector::unit(n, i));
    if (!ti.is_zero()) gens.push_back(ti.matrix());
  }
  KForm reassembled(n, 3);
  for (auto& sub : to_sorted_subspaces(split(gens, complement, n), n)) {
    Factor f;
    f.subspace = std::move(sub);
    f.tau_restricted = pullback(t.tau(), f.subspace.projector());
    type_factor(t, f);
    reassembled += f.tau_restricted;
    report.factors.push_back(std::move(f));
  }
  if (reassembled != t.tau()) throw InconsistencyError("torsion does not reassemble from its factors");
  return report;
}

}  // namespace psct
