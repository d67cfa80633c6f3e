#include "psct/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "psct/errors.hpp"

namespace psct {

int popcount(Mask m) { return __builtin_popcountll(m); }

bool LexMaskLess::operator()(Mask a, Mask b) const {
  int pa = popcount(a);
  int pb = popcount(b);
  if (pa != pb) return pa < pb;
  while (a != 0 && b != 0) {
    int la = __builtin_ctzll(a);
    int lb = __builtin_ctzll(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask m = b; m != 0; m &= m - 1) {
    int j = __builtin_ctzll(m);
    inversions += j == 63 ? 0 : popcount(a >> (j + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

int below(Mask m, int i) { return popcount(m & ((Mask{1} << i) - 1)); }

void check_same_dim(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionError("form dimension mismatch");
}

}  // namespace

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > 64) throw DimensionError("form dimension must lie in 0..64");
  if (degree < 0) throw DimensionError("negative form degree");
}

KForm KForm::monomial(int dim, const std::vector<int>& indices, Scalar coeff) {
  KForm f(dim, static_cast<int>(indices.size()));
  Mask m = 0;
  int inversions = 0;
  for (std::size_t p = 0; p < indices.size(); ++p) {
    int i = indices[p];
    if (i < 1 || i > dim) throw DimensionError("form index out of range");
    for (std::size_t q = p + 1; q < indices.size(); ++q) {
      if (indices[q] < i) ++inversions;
    }
    Mask bit = Mask{1} << (i - 1);
    if (m & bit) return f;
    m |= bit;
  }
  f.add_term(m, inversions % 2 == 0 ? coeff : -coeff);
  return f;
}

KForm KForm::one_form(const Vector& v) {
  KForm f(static_cast<int>(v.dim()), 1);
  for (std::size_t i = 0; i < v.dim(); ++i) f.add_term(Mask{1} << i, v[i]);
  return f;
}

KForm KForm::volume(int dim) {
  KForm f(dim, dim);
  f.add_term(dim == 64 ? ~Mask{0} : (Mask{1} << dim) - 1, 1);
  return f;
}

Scalar KForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar KForm::coeff(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != degree_) throw DimensionError("index count does not match degree");
  KForm probe = monomial(dim_, indices);
  if (probe.is_zero()) return Scalar();
  const auto& [m, s] = *probe.terms().begin();
  return s * coeff(m);
}

void KForm::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if (popcount(m) != degree_) throw DimensionError("term degree mismatch");
  if (dim_ < 64 && (m >> dim_) != 0) throw DimensionError("term index out of range");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar KForm::evaluate(const std::vector<Vector>& vs) const {
  if (static_cast<int>(vs.size()) != degree_) throw DimensionError("wrong number of arguments");
  for (const auto& v : vs) {
    if (static_cast<int>(v.dim()) != dim_) throw DimensionError("argument dimension mismatch");
  }
  Scalar total;
  for (const auto& [m, c] : terms_) {
    auto idx = mask_indices(m);
    Matrix minor(degree_, degree_);
    for (int r = 0; r < degree_; ++r) {
      for (int col = 0; col < degree_; ++col) minor(r, col) = vs[col][idx[r]];
    }
    Scalar d = determinant(std::move(minor));
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

Vector KForm::as_vector() const {
  if (degree_ != 1) throw DimensionError("as_vector requires a 1-form");
  Vector v(dim_);
  for (const auto& [m, c] : terms_) v[__builtin_ctzll(m)] = c;
  return v;
}

KForm& KForm::operator+=(const KForm& o) {
  check_same_dim(*this, o);
  if (degree_ != o.degree_) throw DimensionError("form degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  check_same_dim(*this, o);
  if (degree_ != o.degree_) throw DimensionError("form degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

KForm& KForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

KForm KForm::operator-() const {
  KForm f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

bool operator==(const KForm& a, const KForm& b) {
  return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ")";
    os << "e";
    auto idx = mask_indices(m);
    for (std::size_t p = 0; p < idx.size(); ++p) os << (p ? "," : "") << idx[p] + 1;
  }
  return os.str();
}

SkewEndo::SkewEndo(Matrix m) : m_(std::move(m)) {
  if (!m_.is_skew()) throw DomainError("matrix is not skew-symmetric");
}

SkewEndo SkewEndo::from_form(const KForm& two_form) {
  if (two_form.degree() != 2) throw DimensionError("skew endomorphisms correspond to 2-forms");
  SkewEndo a(two_form.dim());
  for (const auto& [m, c] : two_form.terms()) {
    auto idx = mask_indices(m);
    a.m_(idx[1], idx[0]) = c;
    a.m_(idx[0], idx[1]) = -c;
  }
  return a;
}

KForm SkewEndo::to_form() const {
  KForm f(dim(), 2);
  for (int i = 0; i < dim(); ++i) {
    for (int j = i + 1; j < dim(); ++j) f.add_term((Mask{1} << i) | (Mask{1} << j), m_(j, i));
  }
  return f;
}

Vector SkewEndo::coords() const {
  Vector v(static_cast<std::size_t>(dim() * (dim() - 1) / 2));
  std::size_t k = 0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = i + 1; j < dim(); ++j) v[k++] = m_(j, i);
  }
  return v;
}

SkewEndo SkewEndo::from_coords(int dim, const Vector& c) {
  if (c.dim() != static_cast<std::size_t>(dim * (dim - 1) / 2)) throw DimensionError("so(n) coordinate length mismatch");
  SkewEndo a(dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j, ++k) {
      a.m_(j, i) = c[k];
      a.m_(i, j) = -c[k];
    }
  }
  return a;
}

SkewEndo bracket(const SkewEndo& a, const SkewEndo& b) {
  if (a.dim() != b.dim()) throw DimensionError("endomorphism dimension mismatch");
  return SkewEndo(commutator(a.matrix(), b.matrix()));
}

KForm wedge(const KForm& a, const KForm& b) {
  check_same_dim(a, b);
  KForm out(a.dim(), a.degree() + b.degree());
  if (out.degree() > out.dim()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      out.add_term(ma | mb, wedge_sign(ma, mb) > 0 ? c : -c);
    }
  }
  return out;
}

KForm interior(const Vector& v, const KForm& a) {
  if (static_cast<int>(v.dim()) != a.dim()) throw DimensionError("vector and form dimension mismatch");
  if (a.degree() == 0) throw DimensionError("interior product with a 0-form is undefined");
  KForm out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    for (int i : mask_indices(m)) {
      if (v[i].is_zero()) continue;
      Scalar t = c * v[i];
      out.add_term(m & ~(Mask{1} << i), below(m, i) % 2 == 0 ? t : -t);
    }
  }
  return out;
}

KForm contract(const KForm& a, const KForm& b) {
  check_same_dim(a, b);
  if (a.degree() > b.degree()) throw DimensionError("contraction needs deg a <= deg b");
  KForm out(a.dim(), b.degree() - a.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      Mask rest = mb & ~ma;
      Scalar c = ca * cb;
      out.add_term(rest, wedge_sign(ma, rest) > 0 ? c : -c);
    }
  }
  return out;
}

KForm lie_act(const SkewEndo& A, const KForm& a) {
  if (A.dim() != a.dim()) throw DimensionError("endomorphism and form dimension mismatch");
  KForm out(a.dim(), a.degree());
  const Matrix& M = A.matrix();
  for (const auto& [m, c] : a.terms()) {
    for (int i : mask_indices(m)) {
      Mask rest = m & ~(Mask{1} << i);
      int s1 = below(m, i) % 2 == 0 ? 1 : -1;
      for (int j = 0; j < a.dim(); ++j) {
        const Scalar& aji = M(j, i);
        if (aji.is_zero() || (rest >> j) & 1) continue;
        Mask bit = Mask{1} << j;
        Scalar t = c * aji;
        out.add_term(rest | bit, s1 * wedge_sign(bit, rest) > 0 ? t : -t);
      }
    }
  }
  return out;
}

KForm hodge(const KForm& a, int orientation) {
  if (orientation != 1 && orientation != -1) throw DomainError("orientation must be +1 or -1");
  const int n = a.dim();
  Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  KForm out(n, n - a.degree());
  for (const auto& [m, c] : a.terms()) {
    Mask comp = full & ~m;
    out.add_term(comp, wedge_sign(m, comp) * orientation > 0 ? c : -c);
  }
  return out;
}

Scalar inner(const KForm& a, const KForm& b) {
  check_same_dim(a, b);
  if (a.degree() != b.degree()) throw DimensionError("form degree mismatch");
  Scalar s;
  const KForm& small = a.size() <= b.size() ? a : b;
  const KForm& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

KForm pullback(const KForm& a, const Matrix& m) {
  if (m.rows() != static_cast<std::size_t>(a.dim())) throw DimensionError("pullback matrix shape mismatch");
  const int target = static_cast<int>(m.cols());
  std::vector<KForm> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(KForm::one_form(m.row(i)));
  KForm out(target, a.degree());
  for (const auto& [mask, c] : a.terms()) {
    KForm acc(target, 0);
    acc.add_term(0, c);
    for (int i : mask_indices(mask)) {
      acc = wedge(acc, rows[i]);
      if (acc.is_zero()) break;
    }
    if (!acc.is_zero()) out += acc;
  }
  return out;
}

}  // namespace psct

namespace psct {

Matrix forms_as_columns(const std::vector<KForm>& forms) {
  std::map<Mask, std::size_t, LexMaskLess> row_of;
  for (const auto& f : forms) {
    for (const auto& [m, c] : f.terms()) row_of.try_emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  Matrix a(row_of.size(), forms.size());
  for (std::size_t c = 0; c < forms.size(); ++c) {
    for (const auto& [m, v] : forms[c].terms()) a(row_of[m], c) = v;
  }
  return a;
}

}  // namespace psct
