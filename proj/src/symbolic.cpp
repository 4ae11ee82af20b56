#include "npenta/symbolic.hpp"

#include "npenta/errors.hpp"

namespace npenta {

SymbolicTrace trace_ksnpenta(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y) {
  detail::check_rhs(m.size(), y);
  const Index n = m.size();
  const RationalFunction symbol = RationalFunction::variable();

  NearlyPentaMatrix<RationalFunction> lifted = m.cast<RationalFunction>();
  SymbolicTrace trace(n);

  // A zero d_1 is replaced in the matrix itself as well as in c_1.
  if (lifted.d(1).is_zero()) {
    lifted.d(1) = symbol;
    trace.zero_pivots.push_back(1);
  }

  trace.factors = detail::factorize_with(lifted, [&](Index i, RationalFunction& pivot) {
    if (pivot.is_zero()) {
      pivot = symbol;
      trace.zero_pivots.push_back(i);
    }
  });

  Vector<RationalFunction> rhs(n);
  for (Index k = 0; k < n; ++k) rhs(k) = RationalFunction(y(k));
  trace.z = forward_substitute(trace.factors, rhs);
  trace.x = back_substitute(trace.factors, trace.z);
  trace.det = determinant(trace.factors);
  return trace;
}

SolveReport<Rational> substitute_zero(const SymbolicTrace& trace) {
  SolveReport<Rational> report;
  report.mode = SolveMode::symbolic;
  report.zero_pivots = trace.zero_pivots;
  try {
    report.det = trace.det.eval_at_zero();
  } catch (const PoleAtZero&) {
    throw SingularMatrix("determinant has a pole at x = 0");
  }
  if (report.det.is_zero()) throw SingularMatrix("determinant vanishes at x = 0");

  report.x.resize(trace.x.size());
  for (Index k = 0; k < trace.x.size(); ++k) {
    try {
      report.x(k) = trace.x(k).eval_at_zero();
    } catch (const PoleAtZero&) {
      throw SingularMatrix("solution component x_" + std::to_string(k + 1) + " has a pole at x = 0");
    }
  }
  return report;
}

Rational symbolic_determinant(const NearlyPentaMatrix<Rational>& m) {
  const Vector<Rational> y = Vector<Rational>::Constant(m.size(), Rational(0));
  return trace_ksnpenta(m, y).det.eval_at_zero();
}

SolveReport<Rational> solve_ksnpenta(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y) {
  return substitute_zero(trace_ksnpenta(m, y));
}

SolveReport<Rational> solve_auto(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>& y) {
  try {
    return solve_knpenta(m, y);
  } catch (const ZeroPivot&) {
    return solve_ksnpenta(m, y);
  }
}

}  // namespace npenta
