#include "npenta/rational_function.hpp"

#include <ostream>

#include "npenta/errors.hpp"

namespace npenta {

RationalFunction rf_normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return RationalFunction();
  if (den.degree() > 0 && num.degree() >= 0) {
    const Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  const Rational lead = den.leading();
  if (lead != Rational(1)) {
    const Rational inv = Rational(1) / lead;
    num *= inv;
    den *= inv;
  }
  return RationalFunction(RationalFunction::Canonical{}, std::move(num), std::move(den));
}

Rational RationalFunction::eval_at_zero() const {
  const Rational d = den_.constant_term();
  if (d.is_zero()) throw PoleAtZero();
  return num_.constant_term() / d;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Canonical{}, -num_, den_); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = rf_normalize(num_ + rhs.num_, den_);
  return *this = rf_normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = rf_normalize(num_ - rhs.num_, den_);
  return *this = rf_normalize(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = rf_normalize(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return *this = rf_normalize(num_ * rhs.den_, den_ * rhs.num_);
}

std::string RationalFunction::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace npenta
