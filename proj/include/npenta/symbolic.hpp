#pragma once

#include <vector>

#include "npenta/factor.hpp"
#include "npenta/matrix.hpp"
#include "npenta/rational_function.hpp"

namespace npenta {

/// Everything the symbolic solve computes before substituting x = 0.
struct SymbolicTrace {
  explicit SymbolicTrace(Index n) : factors(n) {}

  Factorization<RationalFunction> factors;
  Vector<RationalFunction> z;
  Vector<RationalFunction> x;
  /// Product of the (possibly replaced) pivots.
  RationalFunction det;
  /// 1-based indices of pivots that vanished and were replaced by x.
  std::vector<Index> zero_pivots;
};

/// Runs the factorization and substitutions over Q(x), replacing every pivot
/// that is identically zero by the indeterminate x. A pivot that is a nonzero
/// function vanishing only at x = 0 is kept.
SymbolicTrace trace_ksnpenta(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y);

/// Evaluates a trace at x = 0. Throws SingularMatrix when the determinant
/// vanishes there or a solution component has a pole at 0.
SolveReport<Rational> substitute_zero(const SymbolicTrace& trace);

/// det(A) through the symbolic factorization: the product of the pivots at
/// x = 0. Returns 0 for singular matrices instead of throwing.
Rational symbolic_determinant(const NearlyPentaMatrix<Rational>& m);

/// Symbolic solve: trace_ksnpenta followed by substitute_zero.
SolveReport<Rational> solve_ksnpenta(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y);

/// Exact solve that falls back to the symbolic path when a pivot vanishes.
/// The report's mode is exact or symbolic accordingly.
SolveReport<Rational> solve_auto(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y);

}  // namespace npenta
