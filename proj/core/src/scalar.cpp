#include "psct/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "psct/errors.hpp"

namespace psct {

namespace {

using Terms = std::vector<Scalar::Surd>;  // radicand 1 stands for the rational part

void normalize(Terms& t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.radicand < b.radicand; });
  Terms out;
  out.reserve(t.size());
  for (auto& s : t) {
    if (!out.empty() && out.back().radicand == s.radicand) {
      out.back().coeff += s.coeff;
    } else {
      out.push_back(std::move(s));
    }
  }
  std::erase_if(out, [](const auto& s) { return sgn(s.coeff) == 0; });
  t = std::move(out);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p >> 64) throw DomainError("radicand overflow in surd product");
  return static_cast<std::uint64_t>(p);
}

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      std::uint64_t g = std::gcd(x.radicand, y.radicand);
      std::uint64_t rad = checked_mul(x.radicand / g, y.radicand / g);
      mpq_class c = x.coeff * y.coeff;
      if (g != 1) c *= mpz_class(std::to_string(g));
      out.push_back({rad, c});
    }
  }
  normalize(out);
  return out;
}

Terms add(Terms a, const Terms& b, int sign) {
  for (const auto& y : b) a.push_back({y.radicand, sign > 0 ? y.coeff : mpq_class(-y.coeff)});
  normalize(a);
  return a;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

bool all_rational(const Terms& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& s) { return s.radicand == 1; });
}

// Writes x = a + b*sqrt(p) where a, b involve no radicand divisible by p.
std::pair<Terms, Terms> split_on_prime(const Terms& t, std::uint64_t p) {
  Terms a, b;
  for (const auto& s : t) {
    if (s.radicand % p == 0) {
      b.push_back({s.radicand / p, s.coeff});
    } else {
      a.push_back(s);
    }
  }
  return {a, b};
}

std::uint64_t pick_prime(const Terms& t) {
  std::uint64_t largest = 1;
  for (const auto& s : t) largest = std::max(largest, s.radicand);
  return smallest_prime_factor(largest);
}

Terms norm_down(const Terms& a, const Terms& b, std::uint64_t p) {
  Terms bb = multiply(b, b);
  for (auto& s : bb) s.coeff *= mpz_class(std::to_string(p));
  return add(multiply(a, a), bb, -1);
}

int sign_of(const Terms& t) {
  if (t.empty()) return 0;
  if (all_rational(t)) return sgn(t.front().coeff);
  std::uint64_t p = pick_prime(t);
  auto [a, b] = split_on_prime(t, p);
  int sa = sign_of(a);
  int sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  int sd = sign_of(norm_down(a, b, p));
  return sd > 0 ? sa : sb;
}

Terms invert(const Terms& t) {
  if (t.empty()) throw DomainError("division by zero");
  if (all_rational(t)) return {{1, mpq_class(1) / t.front().coeff}};
  std::uint64_t p = pick_prime(t);
  auto [a, b] = split_on_prime(t, p);
  Terms conj = a;
  for (const auto& s : b) conj.push_back({s.radicand * p, -s.coeff});
  normalize(conj);
  return multiply(conj, invert(norm_down(a, b, p)));
}

}  // namespace

struct ScalarAccess {
  static Terms terms(const Scalar& s) {
    Terms t;
    t.reserve(s.surds_.size() + 1);
    if (sgn(s.rat_) != 0) t.push_back({1, s.rat_});
    t.insert(t.end(), s.surds_.begin(), s.surds_.end());
    return t;
  }
  static Scalar from(Terms t) {
    Scalar s;
    auto it = t.begin();
    if (it != t.end() && it->radicand == 1) {
      s.rat_ = std::move(it->coeff);
      ++it;
    }
    s.surds_.assign(std::make_move_iterator(it), std::make_move_iterator(t.end()));
    return s;
  }
};

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

std::pair<mpz_class, std::uint64_t> square_free_split(const mpz_class& n) {
  if (sgn(n) < 0) throw DomainError("square_free_split of a negative number");
  if (sgn(n) == 0) return {mpz_class(0), 1};
  mpz_class m = n;
  mpz_class outside = 1;
  mpz_class inside = 1;
  constexpr unsigned long kTrialLimit = 1000000;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) outside *= p;
    if (e % 2 == 1) inside *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      outside *= r;
    } else if (m >= mpz_class(kTrialLimit) * kTrialLimit) {
      throw DomainError("cannot extract square-free part of " + n.get_str());
    } else {
      inside *= m;
    }
  }
  if (!inside.fits_ulong_p()) throw DomainError("radicand too large");
  return {outside, inside.get_ui()};
}

Scalar Scalar::sqrt(const Scalar& x) {
  if (!x.is_rational()) throw DomainError("sqrt is only defined for rational arguments");
  if (sgn(x.rat_) < 0) throw DomainError("sqrt of a negative number");
  if (sgn(x.rat_) == 0) return Scalar();
  mpz_class nd = x.rat_.get_num() * x.rat_.get_den();
  auto [outside, inside] = square_free_split(nd);
  mpq_class c(outside, x.rat_.get_den());
  c.canonicalize();
  if (inside == 1) return Scalar(c);
  Scalar s;
  s.surds_.push_back({inside, c});
  return s;
}

int Scalar::sign() const {
  if (surds_.empty()) return sgn(rat_);
  return sign_of(ScalarAccess::terms(*this));
}

Scalar Scalar::inverse() const {
  if (surds_.empty()) {
    if (sgn(rat_) == 0) throw DomainError("division by zero");
    return Scalar(mpq_class(1) / rat_);
  }
  return ScalarAccess::from(invert(ScalarAccess::terms(*this)));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.rat_ = -s.rat_;
  for (auto& t : s.surds_) t.coeff = -t.coeff;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (surds_.empty() && o.surds_.empty()) {
    rat_ += o.rat_;
    return *this;
  }
  *this = ScalarAccess::from(add(ScalarAccess::terms(*this), ScalarAccess::terms(o), 1));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (surds_.empty() && o.surds_.empty()) {
    rat_ -= o.rat_;
    return *this;
  }
  *this = ScalarAccess::from(add(ScalarAccess::terms(*this), ScalarAccess::terms(o), -1));
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (surds_.empty() && o.surds_.empty()) {
    rat_ *= o.rat_;
    return *this;
  }
  if (o.surds_.empty()) {
    if (sgn(o.rat_) == 0) return *this = Scalar();
    rat_ *= o.rat_;
    for (auto& t : surds_) t.coeff *= o.rat_;
    return *this;
  }
  *this = ScalarAccess::from(multiply(ScalarAccess::terms(*this), ScalarAccess::terms(o)));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.surds_.empty()) {
    if (sgn(o.rat_) == 0) throw DomainError("division by zero");
    rat_ /= o.rat_;
    for (auto& t : surds_) t.coeff /= o.rat_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rat_ != b.rat_ || a.surds_.size() != b.surds_.size()) return false;
  for (std::size_t i = 0; i < a.surds_.size(); ++i) {
    if (a.surds_[i].radicand != b.surds_[i].radicand || a.surds_[i].coeff != b.surds_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Scalar::str() const {
  std::string out;
  if (sgn(rat_) != 0 || surds_.empty()) out = rat_.get_str();
  for (const auto& s : surds_) {
    std::string term;
    if (s.coeff == 1) {
      term = "sqrt(" + std::to_string(s.radicand) + ")";
    } else if (s.coeff == -1) {
      term = "-sqrt(" + std::to_string(s.radicand) + ")";
    } else {
      term = s.coeff.get_str() + "*sqrt(" + std::to_string(s.radicand) + ")";
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

double Scalar::to_double() const {
  double v = rat_.get_d();
  for (const auto& s : surds_) v += s.coeff.get_d() * std::sqrt(static_cast<double>(s.radicand));
  return v;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (c != ' ' && c != '\t') src_.push_back(c);
    }
  }

  Scalar run() {
    if (src_.empty()) fail();
    Scalar total;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail();
      }
      Scalar t = term();
      total += sign > 0 ? t : -t;
      first = false;
    }
    return total;
  }

 private:
  std::string src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail() const { throw DomainError("malformed number: '" + src_ + "'"); }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool consume(std::string_view lit) {
    if (src_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
    if (start == pos_) fail();
    return src_.substr(start, pos_ - start);
  }
  Scalar radical() {
    std::string k = digits();
    if (!consume(")")) fail();
    return Scalar::sqrt(Scalar(mpq_class(mpz_class(k))));
  }
  Scalar term() {
    if (consume("sqrt(")) return radical();
    mpz_class num(digits());
    mpz_class den(1);
    if (consume("/")) {
      den = mpz_class(digits());
      if (sgn(den) == 0) fail();
    }
    mpq_class q(num, den);
    q.canonicalize();
    Scalar c(q);
    if (consume("*")) {
      if (!consume("sqrt(")) fail();
      c *= radical();
    }
    return c;
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace psct
