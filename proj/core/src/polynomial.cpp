#include "psct/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "psct/errors.hpp"

namespace psct {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(int degree, mpq_class c) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  mpq_class lc = leading();
  for (auto& c : p.c_) c /= lc;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : c_) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<mpq_class> out;
  for (auto& v : ints) out.emplace_back(v / content);
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    mpq_class f = rem[i] / b.leading();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

const mpz_class kTrialDivisionBound("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (sgn(n) == 0) throw DomainError("divisors of zero");
  std::vector<std::pair<mpz_class, int>> primes;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis({mpq_class(1)});
    mpq_class denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({mpq_class(-xs[j]), mpq_class(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + basis * Polynomial({mpq_class(ys[i] / denom)});
  }
  return result;
}

bool integral(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

// Kronecker's method: a factor of degree k of the primitive integer polynomial f, if any.
std::optional<Polynomial> factor_of_degree(const Polynomial& f, int k) {
  std::vector<mpq_class> xs, vals;
  for (long t = 0; static_cast<int>(xs.size()) < k + 1; ++t) {
    long x = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
    mpq_class v = f(mpq_class(x));
    if (sgn(v) == 0) continue;
    xs.emplace_back(x);
    vals.push_back(v);
  }
  std::vector<std::vector<mpz_class>> choices;
  double combos = 1;
  for (const auto& v : vals) {
    if (abs(v.get_num()) > kTrialDivisionBound) return std::nullopt;
  }
  for (std::size_t i = 0; i < vals.size(); ++i) {
    auto divs = positive_divisors(vals[i].get_num());
    std::vector<mpz_class> opts = divs;
    if (i > 0) {
      for (const auto& d : divs) opts.push_back(-d);
    }
    combos *= static_cast<double>(opts.size());
    choices.push_back(std::move(opts));
  }
  if (combos > 5e6) return std::nullopt;
  std::vector<std::size_t> pos(choices.size(), 0);
  while (true) {
    std::vector<mpq_class> ys;
    for (std::size_t i = 0; i < choices.size(); ++i) ys.emplace_back(choices[i][pos[i]]);
    Polynomial g = interpolate(xs, ys);
    if (g.degree() == k && integral(g) && divmod(f, g).remainder.is_zero()) return g;
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == pos.size()) break;
  }
  return std::nullopt;
}

// Approximate complex roots by simultaneous (Durand-Kerner) iteration.
std::vector<std::complex<long double>> approximate_roots(const Polynomial& f) {
  using C = std::complex<long double>;
  const int d = f.degree();
  std::vector<C> a(d + 1);
  for (int i = 0; i <= d; ++i) a[i] = C(mpq_class(f.coeffs()[i] / f.leading()).get_d(), 0);
  auto eval = [&](C x) {
    C r = 0;
    for (int i = d; i >= 0; --i) r = r * x + a[i];
    return r;
  };
  long double radius = 1;
  for (int i = 0; i < d; ++i) radius = std::max(radius, 1 + std::abs(a[i]));
  std::vector<C> z(d);
  for (int i = 0; i < d; ++i) z[i] = std::polar(radius, 0.4L + 2 * 3.14159265358979323846L * i / d);
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < d; ++i) {
      C den = 1;
      for (int j = 0; j < d; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (std::abs(den) == 0) den = C(1e-30L, 0);
      C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

// Continued-fraction convergents of x, each checked exactly against f.
void collect_convergent_roots(const Polynomial& f, long double x, std::vector<mpq_class>& roots) {
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double y = x;
  for (int step = 0; step < 40; ++step) {
    long double fl = std::floor(y);
    mpz_class ai(static_cast<double>(fl));
    mpz_class h = ai * h0 + h1, k = ai * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    mpq_class r(h, k);
    r.canonicalize();
    if (sgn(f(r)) == 0) {
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      return;
    }
    long double frac = y - fl;
    if (frac < 1e-18L) return;
    y = 1 / frac;
  }
}

std::vector<mpq_class> rational_roots(const Polynomial& f) {
  std::vector<mpq_class> roots;
  const mpz_class c0 = abs(f.coeffs().front().get_num()), lc = abs(f.leading().get_num());
  if (c0 <= kTrialDivisionBound && lc <= kTrialDivisionBound) {
    auto ps = positive_divisors(c0);
    auto qs = positive_divisors(lc);
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int s : {1, -1}) {
          mpq_class r(mpz_class(p * s), q);
          r.canonicalize();
          if (std::find(roots.begin(), roots.end(), r) == roots.end() && sgn(f(r)) == 0) roots.push_back(r);
        }
      }
    }
  } else {
    for (const auto& z : approximate_roots(f)) {
      if (std::abs(z.imag()) <= 1e-6L * std::max<long double>(1, std::abs(z))) collect_convergent_roots(f, z.real(), roots);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Polynomial& f) {
  if (f.degree() < 1) return {};
  Polynomial sf = divmod(f, gcd(f, f.derivative())).quotient.primitive();
  std::vector<Polynomial> out;
  // Rational roots first.
  if (sgn(sf.coeffs().front()) == 0) {
    out.push_back(Polynomial({mpq_class(0), mpq_class(1)}));
    sf = divmod(sf, out.back()).quotient.primitive();
  }
  if (sf.degree() >= 1) {
    for (const auto& r : rational_roots(sf)) {
      Polynomial lin({mpq_class(-r), mpq_class(1)});
      out.push_back(lin);
      sf = divmod(sf, lin).quotient.primitive();
    }
  }
  for (int k = 2; 2 * k <= sf.degree(); ++k) {
    while (2 * k <= sf.degree()) {
      auto g = factor_of_degree(sf, k);
      if (!g) break;
      out.push_back(g->monic());
      sf = divmod(sf, *g).quotient.primitive();
    }
  }
  if (sf.degree() >= 1) out.push_back(sf.monic());
  return out;
}

std::optional<Polynomial> minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  SpanBuilder span(n * n);
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(n);
  while (span.insert(p.flatten())) {
    powers.push_back(p.flatten());
    p = p * a;
  }
  auto c = solve(Matrix::from_columns(powers, n * n), p.flatten());
  if (!c) throw InconsistencyError("Krylov dependence not solvable");
  std::vector<mpq_class> coeffs;
  for (std::size_t i = 0; i < c->dim(); ++i) {
    if (!(*c)[i].is_rational()) return std::nullopt;
    coeffs.emplace_back(-(*c)[i].rational_part());
  }
  coeffs.emplace_back(1);
  return Polynomial(std::move(coeffs));
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix r(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    r = r * a;
    for (std::size_t k = 0; k < n; ++k) r(k, k) += Scalar(p.coeffs()[i]);
  }
  return r;
}

}  // namespace psct
