#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "psct/linalg.hpp"

namespace psct {

// Univariate polynomial over Q, coefficients stored from the constant term up.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial monomial(int degree, mpq_class c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const { return c_.back(); }
  mpq_class operator()(const mpq_class& x) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;
  std::string str() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<mpq_class> c_;
  void trim();
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
// Distinct monic irreducible factors over Q (the factorization of the square-free part).
std::vector<Polynomial> irreducible_factors(const Polynomial& f);

// Monic minimal polynomial of a square matrix; nullopt when a coefficient is irrational.
std::optional<Polynomial> minimal_polynomial(const Matrix& a);
Matrix evaluate(const Polynomial& p, const Matrix& a);

}  // namespace psct
