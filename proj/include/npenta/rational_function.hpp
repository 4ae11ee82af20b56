#pragma once

#include <iosfwd>
#include <string>

#include "npenta/polynomial.hpp"
#include "npenta/rational.hpp"

namespace npenta {

/// Quotient num/den of polynomials in one indeterminate x, kept canonical:
/// gcd(num, den) = 1, den monic, and zero stored as 0/1. Canonical form makes
/// structural equality coincide with equality of functions.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}

  template <std::integral I>
  RationalFunction(I value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT

  explicit RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}

  /// The indeterminate x.
  static RationalFunction variable() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// num(0)/den(0). Throws PoleAtZero when den(0) = 0.
  Rational eval_at_zero() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  /// Throws DivisionByZero when rhs is the zero function.
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "(<num>)/(<den>)", each polynomial with terms in decreasing degree.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

  friend RationalFunction rf_normalize(Polynomial num, Polynomial den);

 private:
  struct Canonical {};
  RationalFunction(Canonical, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Cancels gcd(num, den) and scales den to be monic. Throws ZeroDenominator for den = 0.
RationalFunction rf_normalize(Polynomial num, Polynomial den);

inline Rational rf_eval_at_zero(const RationalFunction& r) { return r.eval_at_zero(); }

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

}  // namespace npenta

namespace Eigen {

template <>
struct NumTraits<npenta::RationalFunction> : GenericNumTraits<npenta::RationalFunction> {
  using Real = npenta::RationalFunction;
  using NonInteger = npenta::RationalFunction;
  using Nested = npenta::RationalFunction;
  using Literal = npenta::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 1000,
    MulCost = 1000
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
