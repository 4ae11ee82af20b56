#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "npenta/rational.hpp"

namespace npenta {

/// Dense univariate polynomial over the rationals. coeffs()[k] multiplies x^k.
/// The leading coefficient is never zero; the empty sequence is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial x();
  static Polynomial monomial(const Rational& coeff, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(int k) const;
  /// Requires a nonzero polynomial.
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& at) const;
  /// Value at x = 0, i.e. the constant term.
  Rational constant_term() const { return coeff(0); }

  /// Scaled to leading coefficient 1; the zero polynomial is returned unchanged.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Terms in decreasing degree, e.g. "4589918*x - 4092987".
  std::string to_string(std::string_view var = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division. Throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor; poly_gcd(p, 0) = monic(p) and poly_gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial p, Polynomial q);

}  // namespace npenta
