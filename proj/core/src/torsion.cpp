#include "psct/torsion.hpp"

#include <algorithm>
#include <sstream>

#include "psct/errors.hpp"

namespace psct {

TorsionDatum::TorsionDatum(KForm tau) : tau_(std::move(tau)) {
  if (tau_.degree() != 3) throw DimensionError("torsion must be a 3-form");
}

bool SubalgebraBasis::contains(const SkewEndo& A) const {
  if (A.dim() != dim) throw DimensionError("subalgebra dimension mismatch");
  SpanBuilder span(static_cast<std::size_t>(dim * (dim - 1) / 2));
  for (const auto& g : generators) span.insert(g.coords());
  return span.contains(A.coords());
}

bool SubalgebraBasis::verify_closed() {
  SpanBuilder span(static_cast<std::size_t>(dim * (dim - 1) / 2));
  for (const auto& g : generators) span.insert(g.coords());
  closed = true;
  for (std::size_t i = 0; i < generators.size() && closed; ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!span.contains(bracket(generators[i], generators[j]).coords())) {
        closed = false;
        break;
      }
    }
  }
  return closed;
}

SkewEndo tau_map(const TorsionDatum& t, const Vector& X) {
  return SkewEndo::from_form(interior(X, t.tau()));
}

Vector tau_bracket(const TorsionDatum& t, const Vector& X, const Vector& Y) {
  return tau_map(t, X).apply(Y);
}

namespace {

std::vector<SkewEndo> basis_maps(const TorsionDatum& t) {
  std::vector<SkewEndo> maps;
  for (int i = 0; i < t.dim(); ++i) maps.push_back(tau_map(t, Vector::unit(t.dim(), i)));
  return maps;
}

Vector apply_combination(const std::vector<SkewEndo>& maps, const Vector& x, const Vector& y) {
  Vector r(y.dim());
  for (std::size_t l = 0; l < maps.size(); ++l) {
    if (!x[l].is_zero()) r += x[l] * maps[l].apply(y);
  }
  return r;
}

}  // namespace

KForm bianchi_b_tau_squared(const TorsionDatum& t) {
  KForm sum(t.dim(), 4);
  for (int i = 0; i < t.dim(); ++i) {
    KForm ti = interior(Vector::unit(t.dim(), i), t.tau());
    sum += wedge(ti, ti);
  }
  return Scalar::fraction(-1, 2) * sum;
}

KernelBasis kernel(const TorsionDatum& t) {
  const int n = t.dim();
  std::vector<Vector> cols;
  for (const auto& m : basis_maps(t)) cols.push_back(m.coords());
  Matrix a = Matrix::from_columns(cols, static_cast<std::size_t>(n * (n - 1) / 2));
  KernelBasis kb;
  kb.vectors = gram_schmidt(nullspace(a));
  for (const auto& v : kb.vectors) kb.squared_norms.push_back(v.norm2());
  return kb;
}

SubalgebraBasis full_so(int n) {
  SubalgebraBasis so;
  so.dim = n;
  const std::size_t d = static_cast<std::size_t>(n * (n - 1) / 2);
  for (std::size_t k = 0; k < d; ++k) so.generators.push_back(SkewEndo::from_coords(n, Vector::unit(d, k)));
  so.closed = true;
  return so;
}

SubalgebraBasis stabilizer(const TorsionDatum& t) {
  const int n = t.dim();
  SubalgebraBasis so = full_so(n);
  std::vector<KForm> images;
  for (const auto& e : so.generators) images.push_back(lie_act(e, t.tau()));
  SubalgebraBasis stab;
  stab.dim = n;
  for (const auto& v : nullspace(forms_as_columns(images))) stab.generators.push_back(SkewEndo::from_coords(n, v));
  stab.verify_closed();
  if (!stab.closed) throw InconsistencyError("stabilizer is not closed under commutators");
  return stab;
}

SubalgebraBasis lie_closure(int dim, const std::vector<SkewEndo>& gens) {
  SpanBuilder span(static_cast<std::size_t>(dim * (dim - 1) / 2));
  SubalgebraBasis out;
  out.dim = dim;
  for (const auto& g : gens) {
    if (span.insert(g.coords())) out.generators.push_back(g);
  }
  for (std::size_t j = 1; j < out.generators.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      SkewEndo c = bracket(out.generators[i], out.generators[j]);
      if (span.insert(c.coords())) out.generators.push_back(std::move(c));
    }
  }
  out.verify_closed();
  if (!out.closed) throw InconsistencyError("Lie closure did not stabilize");
  return out;
}

SubalgebraBasis generated_algebra(const TorsionDatum& t) { return lie_closure(t.dim(), basis_maps(t)); }

std::optional<std::array<int, 3>> jacobi_witness(const TorsionDatum& t) {
  const int n = t.dim();
  auto maps = basis_maps(t);
  auto e = [n](int i) { return Vector::unit(n, i); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vector s = apply_combination(maps, e(i), maps[j].apply(e(k)));
        s += apply_combination(maps, e(j), maps[k].apply(e(i)));
        s += apply_combination(maps, e(k), maps[i].apply(e(j)));
        if (!s.is_zero()) return std::array<int, 3>{i + 1, j + 1, k + 1};
      }
    }
  }
  return std::nullopt;
}

PsctCertificate psct_certificate(const TorsionDatum& t) {
  PsctCertificate cert;
  cert.bianchi_b_tau2 = bianchi_b_tau_squared(t);
  cert.jacobi_defect_witness = jacobi_witness(t);
  auto maps = basis_maps(t);
  for (int i = 0; i < t.dim(); ++i) {
    if (!lie_act(maps[i], t.tau()).is_zero()) {
      cert.action_defect_witness = i + 1;
      break;
    }
  }
  SubalgebraBasis stab = stabilizer(t);
  SubalgebraBasis gtau = generated_algebra(t);
  SpanBuilder stab_span(static_cast<std::size_t>(t.dim() * (t.dim() - 1) / 2));
  for (const auto& g : stab.generators) stab_span.insert(g.coords());
  cert.gtau_in_stab = true;
  for (const auto& g : gtau.generators) {
    if (!stab_span.contains(g.coords())) {
      cert.gtau_in_stab = false;
      break;
    }
  }
  cert.stab_dim = stab.size();
  cert.gtau_dim = gtau.size();
  cert.ker_dim = kernel(t).vectors.size();

  const bool ii = cert.bianchi_b_tau2.is_zero();
  const bool iii = !cert.jacobi_defect_witness.has_value();
  const bool vi = !cert.action_defect_witness.has_value();
  const bool vii = cert.gtau_in_stab;
  if (ii != iii || ii != vi || ii != vii) {
    std::ostringstream os;
    os << "PSCT conditions disagree: b(tau^2)=0 " << ii << ", Jacobi " << iii << ", action " << vi
       << ", g_tau in stab " << vii;
    throw InconsistencyError(os.str());
  }
  cert.passes = ii;
  return cert;
}

Tensor4 Tensor4::from_form(const KForm& four_form) {
  if (four_form.degree() != 4) throw DimensionError("Tensor4::from_form needs a 4-form");
  const int n = four_form.dim();
  Tensor4 r(n);
  for (const auto& [m, c] : four_form.terms()) {
    auto idx = mask_indices(m);
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      int inv = 0;
      for (int x = 0; x < 4; ++x) {
        for (int y = x + 1; y < 4; ++y) inv += p[x] > p[y];
      }
      r(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]) = inv % 2 == 0 ? c : -c;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return r;
}

Tensor4 tau_squared(const TorsionDatum& t) {
  const int n = t.dim();
  std::vector<Scalar> T(static_cast<std::size_t>(n) * n * n);
  auto at = [n](int a, int b, int c) { return static_cast<std::size_t>((a * n + b) * n + c); };
  for (const auto& [m, c] : t.tau().terms()) {
    auto idx = mask_indices(m);
    std::array<int, 3> p{0, 1, 2};
    do {
      int inv = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
      T[at(idx[p[0]], idx[p[1]], idx[p[2]])] = inv % 2 == 0 ? c : -c;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  Tensor4 r(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int mm = 0; mm < n; ++mm) {
        const Scalar& x = T[at(a, b, mm)];
        if (x.is_zero()) continue;
        for (int c = 0; c < n; ++c) {
          for (int d = 0; d < n; ++d) {
            const Scalar& y = T[at(c, mm, d)];
            if (!y.is_zero()) r(a, b, c, d) += x * y;
          }
        }
      }
    }
  }
  return r;
}

Tensor4 bianchi_map(const Tensor4& r) {
  const int n = r.dim();
  Tensor4 b(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) b(x, y, z, w) = r(x, y, z, w) + r(y, z, x, w) + r(z, x, y, w);
      }
    }
  }
  return b;
}

}  // namespace psct
