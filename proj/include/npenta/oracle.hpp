#pragma once

#include "npenta/scalar.hpp"

namespace npenta {

// Reference dense solver over exact rationals, independent of the banded
// recurrences. Row pivoting picks the first nonzero entry at or below the
// diagonal (smallest row index).

/// Exact determinant; 0 for singular input. Throws ShapeError if not square.
Rational dense_det(const DenseMatrix<Rational>& m);

/// Exact solution of m x = y. Throws SingularMatrix when rank(m) < n and
/// ShapeError on mismatched sizes.
Vector<Rational> dense_solve(const DenseMatrix<Rational>& m, const Vector<Rational>& y);

}  // namespace npenta
