#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psct {

// Exact element of a multi-quadratic field Q(sqrt(p1), sqrt(p2), ...).
//
// Stored as r + sum_i c_i * sqrt(k_i) with rational r, c_i and distinct
// square-free radicands k_i > 1 kept in increasing order. A value without
// surd terms is a plain rational and all arithmetic stays on the mpq path.
class Scalar {
 public:
  struct Surd {
    std::uint64_t radicand;
    mpq_class coeff;
  };

  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : rat_(static_cast<long>(v)) {}
  Scalar(mpq_class q) : rat_(std::move(q)) { rat_.canonicalize(); }

  static Scalar fraction(long num, long den);
  // sqrt of a non-negative rational; throws DomainError otherwise.
  static Scalar sqrt(const Scalar& x);
  // Accepts "p", "p/q", "p/q*sqrt(k)", "sqrt(k)" and sums of such terms.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(rat_) == 0 && surds_.empty(); }
  bool is_rational() const { return surds_.empty(); }
  bool is_one() const { return surds_.empty() && rat_ == 1; }
  const mpq_class& rational_part() const { return rat_; }
  const std::vector<Surd>& surds() const { return surds_; }

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar inverse() const;
  std::string str() const;
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  mpq_class rat_;
  std::vector<Surd> surds_;

  friend struct ScalarAccess;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Square-free decomposition n = a^2 * b, returned as {a, b}. Uses trial
// division and rejects inputs it cannot factor quickly.
std::pair<mpz_class, std::uint64_t> square_free_split(const mpz_class& n);

}  // namespace psct
