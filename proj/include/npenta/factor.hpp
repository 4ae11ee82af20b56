#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "npenta/errors.hpp"
#include "npenta/matrix.hpp"
#include "npenta/scalar.hpp"

namespace npenta {

/// A = L U for a nearly pentadiagonal A, without row exchanges.
///
/// L is unit lower triangular with
///   L(i,i-1) = f_i            (i = 2..n-1),   L(n,n-1) = f_n
///   L(i,i-2) = r_i = b~_i/c_{i-2}  (i = 3..n-1)
///   L(n,n-2) = f_1,  L(n,n-3) = g = t/c_{n-3}
/// and U is upper triangular with
///   U(i,i) = c_i,  U(i,i+1) = e_i (i = 1..n-1),  U(i,i+2) = a~_i (i = 1..n-2),
///   U(1,4) = s,  U(2,4) = e_n.
/// U(2,4) is stored twice: as e(n) and in a_tilde(2), which replaces the
/// original a~_2 of the input. Rows n-1 and n of U have no second superdiagonal.
template <ScalarField S>
struct Factorization {
  explicit Factorization(Index n) : n(n), c(1, n), e(1, n), f(1, n), r(3, n - 1), a_tilde(1, n - 2) {}

  Index n;
  Band<S> c;
  Band<S> e;
  Band<S> f;
  Band<S> r;
  S g{0};
  S s{0};
  Band<S> a_tilde;
};

enum class SolveMode { numeric, exact, symbolic };

inline std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::numeric:
      return "numeric";
    case SolveMode::exact:
      return "exact";
    case SolveMode::symbolic:
      return "symbolic";
  }
  return "unknown";
}

template <ScalarField S>
struct SolveReport {
  Vector<S> x;
  S det{0};
  SolveMode mode = SolveMode::exact;
  /// 1-based indices of pivots replaced by the symbol x (symbolic mode only).
  std::vector<Index> zero_pivots;
  /// max_i |(A x - y)_i|, numeric mode only.
  std::optional<double> residual_norm;
};

struct SolveOptions {
  /// Pivots with |c_i| <= pivot_tolerance count as zero in floating point.
  double pivot_tolerance = 0.0;
};

namespace detail {

/// The factorization recurrences. `on_pivot(i, c_i)` runs once per pivot, in
/// order i = 1..n, right after c_i is formed and before it is used; it may
/// throw or overwrite the pivot. Reads of a~_2 after e_n is formed see e_n.
template <ScalarField S, class PivotHook>
Factorization<S> factorize_with(const NearlyPentaMatrix<S>& m, PivotHook&& on_pivot) {
  const Index n = m.size();
  Factorization<S> lu(n);
  auto& c = lu.c;
  auto& e = lu.e;
  auto& f = lu.f;
  auto& r = lu.r;
  auto& at = lu.a_tilde;
  at = m.a_tilde_band();
  lu.s = m.s();

  c(1) = m.d(1);
  on_pivot(Index{1}, c(1));

  e(1) = m.a(1);
  f(2) = m.b(2) / c(1);
  c(2) = m.d(2) - f(2) * e(1);
  on_pivot(Index{2}, c(2));

  e(2) = m.a(2) - f(2) * at(1);
  e(n) = at(2) - f(2) * m.s();
  at(2) = e(n);

  for (Index i = 3; i <= n - 1; ++i) {
    r(i) = m.b_tilde(i) / c(i - 2);
    f(i) = (m.b(i) - r(i) * e(i - 2)) / c(i - 1);
    c(i) = m.d(i) - f(i) * e(i - 1) - r(i) * at(i - 2);
    on_pivot(i, c(i));
    e(i) = m.a(i) - f(i) * at(i - 1);
    if (i == 3) e(i) = e(i) - r(i) * m.s();
  }

  lu.g = m.t() / c(n - 3);
  f(1) = (m.b_tilde(n) - lu.g * e(n - 3)) / c(n - 2);
  f(n) = (m.b(n) - lu.g * at(n - 3) - f(1) * e(n - 2)) / c(n - 1);
  c(n) = m.d(n) - f(1) * at(n - 2) - f(n) * e(n - 1);
  on_pivot(n, c(n));
  return lu;
}

template <ScalarField S>
void check_rhs(Index n, const Vector<S>& y) {
  if (y.size() != n) throw ShapeError("right-hand side has length " + std::to_string(y.size()) + ", expected " + std::to_string(n));
}

}  // namespace detail

/// Specialized LU of a nearly pentadiagonal matrix in O(n). Throws
/// ZeroPivot(i) for the first vanishing pivot. A vanishing c_n is reported
/// only after every other quantity has been formed: the factors exist, but
/// the system has no unique solution.
template <ScalarField S>
Factorization<S> factorize(const NearlyPentaMatrix<S>& m, const SolveOptions& options = {}) {
  return detail::factorize_with(m, [&](Index i, const S& pivot) {
    if (is_negligible(pivot, options.pivot_tolerance)) throw ZeroPivot(i);
  });
}

/// det(A) as the product of the pivots.
template <ScalarField S>
S determinant(const Factorization<S>& lu) {
  S det(1);
  for (Index i = 1; i <= lu.n; ++i) det = det * lu.c(i);
  return det;
}

/// Solves L z = y.
template <ScalarField S>
Vector<S> forward_substitute(const Factorization<S>& lu, const Vector<S>& y) {
  const Index n = lu.n;
  detail::check_rhs(n, y);
  Band<S> z(1, n);
  z(1) = y(0);
  z(2) = y(1) - lu.f(2) * z(1);
  for (Index i = 3; i <= n - 1; ++i) z(i) = y(i - 1) - lu.f(i) * z(i - 1) - lu.r(i) * z(i - 2);
  z(n) = y(n - 1) - lu.f(n) * z(n - 1) - lu.f(1) * z(n - 2) - lu.g * z(n - 3);
  return z.values();
}

/// Solves U x = z.
template <ScalarField S>
Vector<S> back_substitute(const Factorization<S>& lu, const Vector<S>& z_in) {
  const Index n = lu.n;
  detail::check_rhs(n, z_in);
  const Band<S> z(1, z_in);
  Band<S> x(1, n);
  x(n) = z(n) / lu.c(n);
  x(n - 1) = (z(n - 1) - lu.e(n - 1) * x(n)) / lu.c(n - 1);
  for (Index i = n - 2; i >= 2; --i) x(i) = (z(i) - lu.e(i) * x(i + 1) - lu.a_tilde(i) * x(i + 2)) / lu.c(i);
  x(1) = (z(1) - lu.e(1) * x(2) - lu.a_tilde(1) * x(3) - lu.s * x(4)) / lu.c(1);
  return x.values();
}

/// Solves A x = y with an existing factorization; reusable across right-hand sides.
template <ScalarField S>
Vector<S> solve(const Factorization<S>& lu, const Vector<S>& y) {
  return back_substitute(lu, forward_substitute(lu, y));
}

/// A x using only the stored bands and corners.
template <ScalarField S>
Vector<S> band_matvec(const NearlyPentaMatrix<S>& m, const Vector<S>& x_in) {
  const Index n = m.size();
  detail::check_rhs(n, x_in);
  const Band<S> x(1, x_in);
  Band<S> out(1, n);
  for (Index i = 1; i <= n; ++i) {
    S acc = m.d(i) * x(i);
    if (i <= n - 1) acc = acc + m.a(i) * x(i + 1);
    if (i <= n - 2) acc = acc + m.a_tilde(i) * x(i + 2);
    if (i >= 2) acc = acc + m.b(i) * x(i - 1);
    if (i >= 3) acc = acc + m.b_tilde(i) * x(i - 2);
    out(i) = acc;
  }
  out(1) = out(1) + m.s() * x(4);
  out(n) = out(n) + m.t() * x(n - 3);
  return out.values();
}

/// Factor, substitute, and take the determinant. Throws ZeroPivot on breakdown.
template <ScalarField S>
SolveReport<S> solve_knpenta(const NearlyPentaMatrix<S>& m, const Vector<S>& y, const SolveOptions& options = {}) {
  detail::check_rhs(m.size(), y);
  const Factorization<S> lu = factorize(m, options);
  SolveReport<S> report;
  report.x = solve(lu, y);
  report.det = determinant(lu);
  report.mode = is_exact_v<S> ? SolveMode::exact : SolveMode::numeric;
  if constexpr (std::is_floating_point_v<S>) {
    const Vector<S> residual = band_matvec(m, report.x) - y;
    report.residual_norm = static_cast<double>(residual.cwiseAbs().maxCoeff());
  }
  return report;
}

/// Dense unit lower factor implied by a factorization.
template <ScalarField S>
DenseMatrix<S> lower_factor(const Factorization<S>& lu) {
  const Index n = lu.n;
  DenseMatrix<S> l = DenseMatrix<S>::Identity(n, n);
  for (Index i = 2; i <= n; ++i) l(i - 1, i - 2) = lu.f(i);
  for (Index i = 3; i <= n - 1; ++i) l(i - 1, i - 3) = lu.r(i);
  l(n - 1, n - 3) = lu.f(1);
  l(n - 1, n - 4) = lu.g;
  return l;
}

/// Dense upper factor implied by a factorization.
template <ScalarField S>
DenseMatrix<S> upper_factor(const Factorization<S>& lu) {
  const Index n = lu.n;
  DenseMatrix<S> u = DenseMatrix<S>::Constant(n, n, S(0));
  for (Index i = 1; i <= n; ++i) u(i - 1, i - 1) = lu.c(i);
  for (Index i = 1; i <= n - 1; ++i) u(i - 1, i) = lu.e(i);
  for (Index i = 1; i <= n - 2; ++i) u(i - 1, i + 1) = lu.a_tilde(i);
  u(0, 3) = lu.s;
  return u;
}

}  // namespace npenta
