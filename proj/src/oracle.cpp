#include "npenta/oracle.hpp"

#include <utility>

#include "npenta/errors.hpp"

namespace npenta {

namespace {

// Row-echelon reduction of the augmented system in place. Returns the sign
// of the row permutation, or 0 when a column has no pivot.
int eliminate(DenseMatrix<Rational>& m, Vector<Rational>* rhs) {
  const Index n = m.rows();
  int sign = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      if (rhs != nullptr) std::swap((*rhs)(p), (*rhs)(k));
      sign = -sign;
    }
    const Rational inv_pivot = Rational(1) / m(k, k);
    for (Index r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational factor = m(r, k) * inv_pivot;
      m(r, k) = Rational(0);
      for (Index c = k + 1; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= factor * m(k, c);
      }
      if (rhs != nullptr) (*rhs)(r) -= factor * (*rhs)(k);
    }
  }
  return sign;
}

}  // namespace

Rational dense_det(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  DenseMatrix<Rational> work = m;
  const int sign = eliminate(work, nullptr);
  if (sign == 0) return Rational(0);
  Rational det(sign);
  for (Index k = 0; k < work.rows(); ++k) det *= work(k, k);
  return det;
}

Vector<Rational> dense_solve(const DenseMatrix<Rational>& m, const Vector<Rational>& y) {
  if (m.rows() != m.cols()) throw ShapeError("dense_solve needs a square matrix");
  if (y.size() != m.rows()) throw ShapeError("right-hand side length does not match the matrix");
  const Index n = m.rows();
  DenseMatrix<Rational> work = m;
  Vector<Rational> rhs = y;
  if (eliminate(work, &rhs) == 0) throw SingularMatrix("rank deficient");

  Vector<Rational> x(n);
  for (Index i = n - 1; i >= 0; --i) {
    Rational acc = rhs(i);
    for (Index c = i + 1; c < n; ++c) {
      if (!work(i, c).is_zero()) acc -= work(i, c) * x(c);
    }
    x(i) = acc / work(i, i);
  }
  return x;
}

}  // namespace npenta
