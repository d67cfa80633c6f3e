#include "psct/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

#include "psct/polynomial.hpp"

namespace psct {

StructureError::StructureError(Kind kind, std::array<int, 3> witness, std::array<int, 3> partner,
                               const std::string& what)
    : DomainError(what), kind_(kind), witness_(witness), partner_(partner) {}

namespace {

std::string triple(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

void validate(int n, const std::vector<Vector>& br) {
  auto c = [&](int i, int j, int k) -> const Scalar& { return br[static_cast<std::size_t>(i * n + j)][k]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          std::array<int, 3> w{i + 1, j + 1, k + 1};
          throw StructureError(StructureError::Kind::Antisymmetry, w, {j + 1, i + 1, k + 1},
                               "bracket is not antisymmetric at " + triple(w));
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(i, k, j)) {
          std::array<int, 3> w{i + 1, j + 1, k + 1}, p{i + 1, k + 1, j + 1};
          throw StructureError(StructureError::Kind::Invariance, w, p,
                               "g([X,Y],Z) is not alternating: " + triple(w) + "/" + triple(p));
        }
      }
    }
  }
  auto bracket_with = [&](int i, const Vector& v) {
    Vector r(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
      if (!v[m].is_zero()) r += v[m] * br[static_cast<std::size_t>(i * n + m)];
    }
    return r;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vector s = bracket_with(i, br[static_cast<std::size_t>(j * n + k)]);
        s += bracket_with(j, br[static_cast<std::size_t>(k * n + i)]);
        s += bracket_with(k, br[static_cast<std::size_t>(i * n + j)]);
        if (!s.is_zero()) {
          std::array<int, 3> w{i + 1, j + 1, k + 1};
          throw StructureError(StructureError::Kind::Jacobi, w, w, "Jacobi identity fails at " + triple(w));
        }
      }
    }
  }
}

}  // namespace

MetricLieAlgebra MetricLieAlgebra::from_brackets(int dim, std::vector<Vector> br, std::string name,
                                                 std::vector<LieFactor> factors, bool check) {
  if (dim < 0 || br.size() != static_cast<std::size_t>(dim * dim)) throw DimensionError("bracket table size mismatch");
  for (const auto& v : br) {
    if (v.dim() != static_cast<std::size_t>(dim)) throw DimensionError("bracket vector dimension mismatch");
  }
  if (check) validate(dim, br);
  MetricLieAlgebra L;
  L.n_ = dim;
  L.name_ = std::move(name);
  L.factors_ = std::move(factors);
  L.br_ = std::move(br);
  return L;
}

MetricLieAlgebra MetricLieAlgebra::from_structure_constants(int dim, const std::vector<StructureConstant>& constants,
                                                            std::string name) {
  if (dim < 1) throw DimensionError("Lie algebra dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(dim);
  std::map<std::array<int, 3>, Scalar> given;
  for (const auto& sc : constants) {
    for (int x : {sc.i, sc.j, sc.k}) {
      if (x < 1 || x > dim) throw DimensionError("structure constant index out of range");
    }
    std::array<int, 3> key{sc.i, sc.j, sc.k};
    if (sc.i == sc.j && !sc.c.is_zero()) {
      throw StructureError(StructureError::Kind::Antisymmetry, key, key,
                           "bracket is not antisymmetric at " + triple(key));
    }
    auto [it, inserted] = given.emplace(key, sc.c);
    if (!inserted && it->second != sc.c) throw DomainError("conflicting values for c" + triple(key));
  }
  std::vector<Vector> br(n * n, Vector(n));
  for (const auto& [key, c] : given) {
    if (key[0] == key[1]) continue;
    std::array<int, 3> swapped{key[1], key[0], key[2]};
    auto other = given.find(swapped);
    if (other != given.end() && other->second != -c) {
      throw StructureError(StructureError::Kind::Antisymmetry, key, swapped,
                           "bracket is not antisymmetric at " + triple(key));
    }
    br[static_cast<std::size_t>((key[0] - 1) * dim + key[1] - 1)][key[2] - 1] = c;
    br[static_cast<std::size_t>((key[1] - 1) * dim + key[0] - 1)][key[2] - 1] = -c;
  }
  LieFactor f{name.empty() ? "custom" : name, LieFamily::Custom, dim, 0, dim};
  return from_brackets(dim, std::move(br), std::move(name), {f});
}

Vector MetricLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.dim() != static_cast<std::size_t>(n_) || y.dim() != static_cast<std::size_t>(n_)) {
    throw DimensionError("bracket argument dimension mismatch");
  }
  Vector r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vector& b = bracket(i, j);
      if (!b.is_zero()) r += (x[i] * y[j]) * b;
    }
  }
  return r;
}

Matrix MetricLieAlgebra::ad(const Vector& x) const {
  std::vector<Vector> cols;
  for (int j = 0; j < n_; ++j) cols.push_back(bracket(x, Vector::unit(n_, j)));
  return Matrix::from_columns(cols, static_cast<std::size_t>(n_));
}

std::vector<StructureConstant> MetricLieAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Vector& b = bracket(i, j);
      for (int k = 0; k < n_; ++k) {
        if (!b[k].is_zero()) out.push_back({i + 1, j + 1, k + 1, b[k]});
      }
    }
  }
  return out;
}

MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  const int n = a.dim() + b.dim();
  std::vector<Vector> br(static_cast<std::size_t>(n * n), Vector(static_cast<std::size_t>(n)));
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      for (int k = 0; k < a.dim(); ++k) br[static_cast<std::size_t>(i * n + j)][k] = a.bracket(i, j)[k];
    }
  }
  const int o = a.dim();
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      for (int k = 0; k < b.dim(); ++k) br[static_cast<std::size_t>((i + o) * n + j + o)][k + o] = b.bracket(i, j)[k];
    }
  }
  std::vector<LieFactor> factors = a.factors();
  for (LieFactor f : b.factors()) {
    f.offset += o;
    factors.push_back(f);
  }
  std::string name = a.name().empty() ? b.name() : (b.name().empty() ? a.name() : a.name() + " + " + b.name());
  return MetricLieAlgebra::from_brackets(n, std::move(br), std::move(name), std::move(factors), false);
}

namespace {

struct Entry {
  int r;
  int c;
  Scalar v;
};
using Sparse = std::vector<Entry>;

struct SparseBasis {
  int size = 0;  // matrix size
  Scalar trace_factor;
  std::vector<Sparse> elements;
};

Scalar inv_sqrt(long n) { return Scalar::sqrt(Scalar::fraction(1, n)); }

SparseBasis so_basis(int k) {
  SparseBasis b{k, Scalar::fraction(1, 2), {}};
  if (k == 5) {
    auto E = [](int i, int j, Scalar v) { return Entry{i - 1, j - 1, std::move(v)}; };
    const Scalar r = inv_sqrt(2);
    b.elements = {
        {E(2, 1, 1), E(1, 2, -1)},
        {E(4, 3, 1), E(3, 4, -1)},
        {E(1, 5, 1), E(5, 1, -1)},
        {E(2, 5, 1), E(5, 2, -1)},
        {E(3, 5, 1), E(5, 3, -1)},
        {E(4, 5, 1), E(5, 4, -1)},
        {E(1, 3, r), E(2, 4, -r), E(3, 1, -r), E(4, 2, r)},
        {E(1, 4, r), E(2, 3, r), E(3, 2, -r), E(4, 1, -r)},
        {E(1, 3, r), E(2, 4, r), E(3, 1, -r), E(4, 2, -r)},
        {E(1, 4, -r), E(2, 3, r), E(3, 2, -r), E(4, 1, r)},
    };
    return b;
  }
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) b.elements.push_back({Entry{c, a, 1}, Entry{a, c, -1}});
  }
  return b;
}

// Complex k x k matrices realized as real 2k x 2k matrices [[A, -B], [B, A]].
SparseBasis su_basis(int k) {
  SparseBasis b{2 * k, Scalar(1), {}};
  auto real = [k](Sparse& s, int p, int q, const Scalar& v) {
    s.push_back({p, q, v});
    s.push_back({p + k, q + k, v});
  };
  auto imag = [k](Sparse& s, int p, int q, const Scalar& v) {
    s.push_back({p + k, q, v});
    s.push_back({p, q + k, -v});
  };
  for (int m = 1; m < k; ++m) {
    Sparse h;
    Scalar s = inv_sqrt(2L * m * (m + 1));
    for (int p = 0; p < m; ++p) imag(h, p, p, s);
    imag(h, m, m, Scalar(-m) * s);
    b.elements.push_back(std::move(h));
  }
  const Scalar half = Scalar::fraction(1, 2);
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      Sparse a, s;
      real(a, p, q, half);
      real(a, q, p, -half);
      imag(s, p, q, half);
      imag(s, q, p, half);
      b.elements.push_back(std::move(a));
      b.elements.push_back(std::move(s));
    }
  }
  return b;
}

// Quaternionic k x k matrices acting on H^k = R^{4k} by left multiplication.
SparseBasis sp_basis(int k) {
  SparseBasis b{4 * k, Scalar(1), {}};
  // Left multiplication by 1, i, j, k on the real basis (1, i, j, k): column c maps to (row, sign).
  static const int rows[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto put = [](Sparse& s, int p, int q, int u, const Scalar& v) {
    for (int c = 0; c < 4; ++c) s.push_back({4 * p + rows[u][c], 4 * q + c, Scalar(signs[u][c]) * v});
  };
  const Scalar half = Scalar::fraction(1, 2);
  for (int p = 0; p < k; ++p) {
    Sparse s;
    put(s, p, p, 1, half);
    b.elements.push_back(std::move(s));
  }
  for (int p = 0; p < k; ++p) {
    for (int u : {2, 3}) {
      Sparse s;
      put(s, p, p, u, half);
      b.elements.push_back(std::move(s));
    }
  }
  const Scalar off = inv_sqrt(8);
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      for (int u = 0; u < 4; ++u) {
        Sparse s;
        put(s, p, q, u, off);
        put(s, q, p, u, u == 0 ? -off : off);  // -conj(u) E_qp
        b.elements.push_back(std::move(s));
      }
    }
  }
  return b;
}

SparseBasis sparse_basis(LieFamily family, int k) {
  switch (family) {
    case LieFamily::Orthogonal:
      return so_basis(k);
    case LieFamily::SpecialUnitary:
      return su_basis(k);
    case LieFamily::Symplectic:
      return sp_basis(k);
    default:
      throw DomainError("no matrix model for this family");
  }
}

Matrix dense(const Sparse& s, int size) {
  Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (const auto& e : s) m(e.r, e.c) += e.v;
  return m;
}

std::vector<Vector> brackets_from_basis(const SparseBasis& b) {
  const int n = static_cast<int>(b.elements.size());
  // (row, col) -> list of (element, value), used to evaluate tr(C B_m).
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> where;
  for (int m = 0; m < n; ++m) {
    for (const auto& e : b.elements[m]) where[{e.r, e.c}].emplace_back(m, e.v);
  }
  auto product = [](const Sparse& x, const Sparse& y, std::map<std::pair<int, int>, Scalar>& acc, int sign) {
    for (const auto& a : x) {
      for (const auto& c : y) {
        if (a.c != c.r) continue;
        Scalar v = a.v * c.v;
        if (sign < 0) v = -v;
        acc[{a.r, c.c}] += v;
      }
    }
  };
  std::vector<Vector> br(static_cast<std::size_t>(n * n), Vector(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::map<std::pair<int, int>, Scalar> comm;
      product(b.elements[i], b.elements[j], comm, 1);
      product(b.elements[j], b.elements[i], comm, -1);
      Vector coeff(static_cast<std::size_t>(n));
      for (const auto& [pos, v] : comm) {
        if (v.is_zero()) continue;
        auto it = where.find({pos.second, pos.first});
        if (it == where.end()) continue;
        for (const auto& [m, bv] : it->second) coeff[m] -= b.trace_factor * v * bv;
      }
      br[static_cast<std::size_t>(i * n + j)] = coeff;
      br[static_cast<std::size_t>(j * n + i)] = -coeff;
    }
  }
  return br;
}

int family_dim(LieFamily f, int k) {
  switch (f) {
    case LieFamily::SpecialUnitary:
      return k * k - 1;
    case LieFamily::Orthogonal:
      return k * (k - 1) / 2;
    case LieFamily::Symplectic:
      return k * (2 * k + 1);
    default:
      return k;
  }
}

MetricLieAlgebra simple_model(LieFamily family, int k, const std::string& name) {
  const int n = family_dim(family, k);
  LieFactor f{name, family, k, 0, n};
  if (family == LieFamily::Abelian) {
    return MetricLieAlgebra::from_brackets(n, std::vector<Vector>(static_cast<std::size_t>(n * n), Vector(n)), name,
                                           {f}, false);
  }
  return MetricLieAlgebra::from_brackets(n, brackets_from_basis(sparse_basis(family, k)), name, {f}, false);
}

}  // namespace

MatrixBasis matrix_basis(LieFamily family, int k) {
  SparseBasis b = sparse_basis(family, k);
  MatrixBasis out{{}, b.trace_factor};
  for (const auto& s : b.elements) out.elements.push_back(dense(s, b.size));
  return out;
}

MetricLieAlgebra matrix_model(const std::string& expression) {
  std::string compact;
  for (char ch : expression) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw DomainError("empty Lie algebra expression");
  static const std::regex classical(R"((su|so|sp)\((\d{1,3})\))");
  static const std::regex abelian(R"(R(\^(\d{1,3}))?)");
  std::vector<std::pair<LieFamily, int>> parts;
  std::size_t start = 0;
  int total = 0;
  while (start <= compact.size()) {
    std::size_t end = compact.find('+', start);
    if (end == std::string::npos) end = compact.size();
    std::string token = compact.substr(start, end - start);
    std::smatch m;
    LieFamily family;
    int k;
    if (std::regex_match(token, m, classical)) {
      k = std::stoi(m[2]);
      family = m[1] == "su" ? LieFamily::SpecialUnitary
               : m[1] == "so" ? LieFamily::Orthogonal
                              : LieFamily::Symplectic;
      const int min_k = family == LieFamily::Symplectic ? 1 : 2;
      if (k < min_k) throw DomainError("rank too small in '" + token + "'");
    } else if (std::regex_match(token, m, abelian)) {
      family = LieFamily::Abelian;
      k = m[2].matched ? std::stoi(m[2]) : 1;
      if (k < 1) throw DomainError("R^0 is not allowed");
    } else {
      throw DomainError("unknown Lie algebra '" + token + "'");
    }
    total += family_dim(family, k);
    if (total > kMaxModelDim) {
      throw DomainError("total dimension exceeds the bound " + std::to_string(kMaxModelDim));
    }
    parts.emplace_back(family, k);
    start = end + 1;
  }
  auto label = [](LieFamily f, int k) {
    switch (f) {
      case LieFamily::SpecialUnitary:
        return "su(" + std::to_string(k) + ")";
      case LieFamily::Orthogonal:
        return "so(" + std::to_string(k) + ")";
      case LieFamily::Symplectic:
        return "sp(" + std::to_string(k) + ")";
      default:
        return "R^" + std::to_string(k);
    }
  };
  MetricLieAlgebra L = simple_model(parts[0].first, parts[0].second, label(parts[0].first, parts[0].second));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    L = direct_sum(L, simple_model(parts[i].first, parts[i].second, label(parts[i].first, parts[i].second)));
  }
  return L;
}

KForm canonical_three_form(const MetricLieAlgebra& L) {
  const int n = L.dim();
  KForm sigma(n, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector& b = L.bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        if (!b[k].is_zero()) sigma.add_term((Mask{1} << i) | (Mask{1} << j) | (Mask{1} << k), b[k]);
      }
    }
  }
  return sigma;
}

KForm ce_differential(const MetricLieAlgebra& L, const KForm& a) {
  const int n = L.dim();
  if (a.dim() != n) throw DimensionError("form and Lie algebra dimensions differ");
  if (a.degree() >= n) return KForm(n, std::min(a.degree() + 1, n));
  // d e^m = -sum_{i<j} c_ij^m e^{ij}
  std::vector<std::vector<std::pair<Mask, Scalar>>> de(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector& b = L.bracket(i, j);
      for (int m = 0; m < n; ++m) {
        if (!b[m].is_zero()) de[m].emplace_back((Mask{1} << i) | (Mask{1} << j), -b[m]);
      }
    }
  }
  // d(e^{m_1..m_k}) = sum_s (-1)^{s-1} de^{m_s} ∧ e^{M \ m_s}
  KForm out(n, a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    auto idx = mask_indices(mask);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Mask rest = mask & ~(Mask{1} << idx[s]);
      const Scalar sc = s % 2 == 0 ? c : -c;
      for (const auto& [pair, v] : de[idx[s]]) {
        if (pair & rest) continue;
        out.add_term(pair | rest, Scalar(wedge_sign(pair, rest)) * sc * v);
      }
    }
  }
  return out;
}

namespace {

// Matrix of M restricted to the invariant span of `basis`, in that basis.
Matrix restrict_matrix(const Matrix& M, const std::vector<Vector>& basis) {
  const std::size_t n = M.rows();
  Matrix B = Matrix::from_columns(basis, n);
  Matrix Bt = B.transpose();
  auto gram_inv = inverse(Bt * B);
  if (!gram_inv) throw DomainError("dependent basis");
  return *gram_inv * (Bt * (M * B));
}

std::vector<Vector> lift(const std::vector<Vector>& coords, const std::vector<Vector>& basis) {
  std::vector<Vector> out;
  for (const auto& c : coords) {
    Vector v(basis.front().dim());
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (!c[i].is_zero()) v += c[i] * basis[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct Block {
  std::vector<Vector> basis;
  std::vector<Scalar> alpha_sq;  // alpha(t_i)^2 per Cartan vector
};

Matrix shifted(Matrix m, const Scalar& nu) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= nu;
  return m;
}

}  // namespace

Vector RootDecomp::root_vector(const Root& r) const {
  const std::size_t k = cartan.size();
  Matrix G(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) G(a, b) = dot(cartan.basis[a], cartan.basis[b]);
  }
  auto c = solve(G, Vector(r.alpha));
  if (!c) throw InconsistencyError("Cartan Gram matrix is singular");
  Vector v(static_cast<std::size_t>(cartan.dim));
  for (std::size_t a = 0; a < k; ++a) v += (*c)[a] * cartan.basis[a];
  return v;
}

RootDecomp root_space_decomposition(const MetricLieAlgebra& L, const Subspace& t) {
  const int n = L.dim();
  if (t.dim != n) throw DimensionError("Cartan subspace lives in the wrong dimension");
  if (rank(Matrix::from_columns(t.basis, static_cast<std::size_t>(n))) != t.size()) {
    throw DomainError("Cartan basis is linearly dependent");
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (!L.bracket(t.basis[a], t.basis[b]).is_zero()) throw DomainError("t is not abelian");
    }
  }
  std::vector<Matrix> ads;
  std::vector<Vector> rows;
  for (const auto& v : t.basis) {
    ads.push_back(L.ad(v));
    for (std::size_t r = 0; r < ads.back().rows(); ++r) rows.push_back(ads.back().row(r));
  }
  const std::size_t centralizer =
      t.size() == 0 ? static_cast<std::size_t>(n)
                    : nullspace(Matrix::from_rows(rows, static_cast<std::size_t>(n))).size();
  if (centralizer != t.size()) throw DomainError("t is not self-centralizing");

  RootDecomp rd;
  rd.cartan = t;
  auto complement = orthogonal_complement(t.basis, static_cast<std::size_t>(n));
  if (complement.empty()) return rd;

  // Joint eigenspaces of the ad(t_i)^2.
  std::vector<Block> blocks{{canonical_basis(complement, static_cast<std::size_t>(n)), {}}};
  for (const auto& ad : ads) {
    Matrix sq = ad * ad;
    std::vector<Block> next;
    for (auto& b : blocks) {
      Matrix R = restrict_matrix(sq, b.basis);
      auto mp = minimal_polynomial(R);
      if (!mp) throw DomainError("ad(t)^2 has irrational eigenvalues; roots are not expressible exactly");
      for (const auto& f : irreducible_factors(*mp)) {
        if (f.degree() != 1) throw DomainError("ad(t)^2 has irrational eigenvalues; roots are not expressible exactly");
        const mpq_class lambda = -f.coeffs()[0];
        auto coords = nullspace(shifted(R, Scalar(lambda)));
        Block nb{canonical_basis(lift(coords, b.basis), static_cast<std::size_t>(n)), b.alpha_sq};
        nb.alpha_sq.push_back(Scalar(mpq_class(-lambda)));
        next.push_back(std::move(nb));
      }
    }
    blocks = std::move(next);
  }
  // Separate roots with equal |alpha(t_i)| by the products ad(t_i) ad(t_j), eigenvalue -alpha_i alpha_j.
  for (std::size_t i = 0; i < ads.size(); ++i) {
    for (std::size_t j = i + 1; j < ads.size(); ++j) {
      Matrix prod = ads[i] * ads[j];
      std::vector<Block> next;
      for (auto& b : blocks) {
        if (b.basis.size() <= 2 || b.alpha_sq[i].is_zero() || b.alpha_sq[j].is_zero()) {
          next.push_back(std::move(b));
          continue;
        }
        Matrix R = restrict_matrix(prod, b.basis);
        Scalar nu = Scalar::sqrt(b.alpha_sq[i] * b.alpha_sq[j]);
        std::size_t covered = 0;
        for (const Scalar& ev : {nu, -nu}) {
          auto coords = nullspace(shifted(R, ev));
          if (coords.empty()) continue;
          covered += coords.size();
          next.push_back({canonical_basis(lift(coords, b.basis), static_cast<std::size_t>(n)), b.alpha_sq});
        }
        if (covered != b.basis.size()) throw InconsistencyError("ad(t) products are not diagonalizable");
      }
      blocks = std::move(next);
    }
  }
  for (const auto& b : blocks) {
    if (b.basis.size() != 2) {
      throw DomainError("root space of dimension " + std::to_string(b.basis.size()) + "; t is not a Cartan subalgebra");
    }
  }
  auto lowest = [](const Block& b) {
    std::size_t low = b.basis.front().dim();
    for (const auto& v : b.basis) {
      for (std::size_t c = 0; c < v.dim(); ++c) {
        if (!v[c].is_zero()) {
          low = std::min(low, c);
          break;
        }
      }
    }
    return low;
  };
  std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) { return lowest(a) < lowest(b); });

  for (const auto& b : blocks) {
    std::size_t lead = 0;
    while (lead < b.alpha_sq.size() && b.alpha_sq[lead].is_zero()) ++lead;
    if (lead == b.alpha_sq.size()) throw InconsistencyError("zero root outside the Cartan subalgebra");
    Root r;
    const Vector& v = b.basis.front();
    r.x = Scalar::sqrt(v.norm2()).inverse() * v;
    const Scalar a0 = Scalar::sqrt(b.alpha_sq[lead]);
    r.y = a0.inverse() * (ads[lead] * r.x);
    for (const auto& ad : ads) r.alpha.push_back(dot(ad * r.x, r.y));
    rd.roots.push_back(std::move(r));
  }
  return rd;
}

Subspace default_cartan(const MetricLieAlgebra& L) {
  Subspace t;
  t.dim = L.dim();
  for (const auto& f : L.factors()) {
    std::vector<int> local;
    switch (f.family) {
      case LieFamily::SpecialUnitary:
        for (int m = 0; m < f.k - 1; ++m) local.push_back(m);
        break;
      case LieFamily::Symplectic:
        for (int m = 0; m < f.k; ++m) local.push_back(m);
        break;
      case LieFamily::Orthogonal:
        if (f.k == 5) {
          local = {0, 1};
        } else {
          // E_{b a} - E_{a b} for (a, b) = (1, 2), (3, 4), ... in lexicographic position.
          for (int a = 0; a + 1 < f.k; a += 2) local.push_back(a * f.k - a * (a + 1) / 2);
        }
        break;
      case LieFamily::Abelian:
        for (int m = 0; m < f.dim; ++m) local.push_back(m);
        break;
      case LieFamily::Custom:
        throw DomainError("no default Cartan subalgebra for a custom algebra");
    }
    for (int m : local) t.basis.push_back(Vector::unit(L.dim(), f.offset + m));
  }
  return t;
}

}  // namespace psct
