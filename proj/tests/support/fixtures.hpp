#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "npenta/factor.hpp"
#include "npenta/matrix.hpp"
#include "npenta/oracle.hpp"
#include "npenta/rational_function.hpp"

namespace npenta::testing {

inline Vector<Rational> rationals(std::initializer_list<std::string_view> values) {
  Vector<Rational> out(static_cast<Index>(values.size()));
  Index k = 0;
  for (auto v : values) out(k++) = Rational::parse(v);
  return out;
}

inline Vector<Rational> integers(std::initializer_list<long> values) {
  Vector<Rational> out(static_cast<Index>(values.size()));
  Index k = 0;
  for (long v : values) out(k++) = Rational(v);
  return out;
}

inline Vector<Rational> one_to_n(Index n) {
  Vector<Rational> out(n);
  for (Index k = 0; k < n; ++k) out(k) = Rational(k + 1);
  return out;
}

/// Values of a band in storage order, for comparisons.
template <class S>
Vector<S> slice(const Band<S>& band, Index first, Index last) {
  Vector<S> out(last - first + 1);
  for (Index i = first; i <= last; ++i) out(i - first) = band(i);
  return out;
}

struct System {
  NearlyPentaMatrix<Rational> matrix;
  Vector<Rational> y;
};

/// The 10 x 10 worked system whose solution is 1..10.
inline System worked_system() {
  NearlyPentaMatrix<Rational> m(10);
  m.d_band().values() = integers({3, 2, 5, 1, 2, 2, 12, 3, 21, 31});
  m.a_band().values() = integers({-1, 1, 5, 1, 5, 7, 3, 1, 3});
  m.a_tilde_band().values() = integers({3, 2, 1, 3, 1, -5, -4, 20});
  m.b_band().values() = integers({-2, -4, -2, 1, -3, 1, 5, 11, -9});
  m.b_tilde_band().values() = integers({3, 3, 6, 3, -8, 2, 3, 4});
  m.s() = Rational(5);
  m.t() = Rational(-2);
  return {m, integers({30, 13, 35, 27, 69, 18, 38, 280, 328, 247})};
}

/// Same matrix with d_1 = 0 and y_1 = 27; the first pivot vanishes.
inline System zero_pivot_system() {
  System sys = worked_system();
  sys.matrix.d(1) = Rational(0);
  sys.y(0) = Rational(27);
  return sys;
}

/// Dense form of worked_system().
inline DenseMatrix<Rational> worked_dense() {
  const long rows[10][10] = {
      {3, -1, 3, 5, 0, 0, 0, 0, 0, 0},   {-2, 2, 1, 2, 0, 0, 0, 0, 0, 0},  {3, -4, 5, 5, 1, 0, 0, 0, 0, 0},
      {0, 3, -2, 1, 1, 3, 0, 0, 0, 0},   {0, 0, 6, 1, 2, 5, 1, 0, 0, 0},   {0, 0, 0, 3, -3, 2, 7, -5, 0, 0},
      {0, 0, 0, 0, -8, 1, 12, 3, -4, 0}, {0, 0, 0, 0, 0, 2, 5, 3, 1, 20},  {0, 0, 0, 0, 0, 0, 3, 11, 21, 3},
      {0, 0, 0, 0, 0, 0, -2, 4, -9, 31}};
  DenseMatrix<Rational> out(10, 10);
  for (Index r = 0; r < 10; ++r) {
    for (Index c = 0; c < 10; ++c) out(r, c) = Rational(rows[r][c]);
  }
  return out;
}

inline NearlyPentaMatrix<Rational> identity(Index n) {
  NearlyPentaMatrix<Rational> m(n);
  m.d_band().values().setConstant(Rational(1));
  return m;
}

/// Pivot c_k of the symbolic factorization (earlier vanishing pivots replaced
/// by x). Returns nullopt unless that pivot is a constant.
inline std::optional<Rational> pivot_value(const NearlyPentaMatrix<Rational>& m, Index k) {
  struct Stop {
    RationalFunction value;
  };
  NearlyPentaMatrix<RationalFunction> lifted = m.cast<RationalFunction>();
  try {
    detail::factorize_with(lifted, [&](Index i, RationalFunction& c) {
      if (i == k) throw Stop{c};
      if (c.is_zero()) c = RationalFunction::variable();
    });
  } catch (const Stop& stop) {
    if (stop.value.is_constant()) return stop.value.eval_at_zero();
  } catch (const DivisionByZero&) {
  }
  return std::nullopt;
}

/// e_k of the rescued symbolic factorization, when it is a constant.
inline std::optional<Rational> upper_value(const NearlyPentaMatrix<Rational>& m, Index k) {
  const auto lu = detail::factorize_with(m.cast<RationalFunction>(), [](Index, RationalFunction& c) {
    if (c.is_zero()) c = RationalFunction::variable();
  });
  if (!lu.e(k).is_constant()) return std::nullopt;
  return lu.e(k).eval_at_zero();
}

struct CorpusCase {
  NearlyPentaMatrix<Rational> matrix;
  Vector<Rational> y;
  /// Pivots forced to vanish, in increasing order (may be empty).
  std::vector<Index> forced_zero_pivots;
};

/// Random nonsingular system with `forced` (0, 1 or 2) vanishing pivots,
/// made by shifting the matching diagonal entries. Two forced pivots are
/// consecutive, c_k and c_{k+1}: a_k is adjusted so that e_k = 0, which keeps
/// c_{k+1} free of the symbol once c_k is replaced.
/// Retries with derived seeds until the dense determinant is nonzero.
inline CorpusCase random_case(Index n, std::uint64_t seed, int forced) {
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::uint64_t attempt = 0;; ++attempt) {
    NearlyPentaMatrix<Rational> m = gen_random(n, seed * 7919 + attempt, false);
    std::vector<Index> targets;
    if (forced == 1) {
      // Half of them use c_1.
      targets.push_back(engine() % 2 == 0 ? 1 : std::uniform_int_distribution<Index>(2, n - 1)(engine));
    } else if (forced == 2) {
      const Index k = std::uniform_int_distribution<Index>(1, n - 2)(engine);
      const std::optional<Rational> ek = upper_value(m, k);
      if (!ek) continue;
      m.a(k) = m.a(k) - *ek;
      targets = {k, k + 1};
    }

    bool ok = true;
    for (Index k : targets) {
      const std::optional<Rational> ck = pivot_value(m, k);
      if (!ck) {
        ok = false;
        break;
      }
      m.d(k) = m.d(k) - *ck;
    }
    if (!ok || dense_det(to_dense(m)).is_zero()) continue;

    Vector<Rational> y(n);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (Index k = 0; k < n; ++k) y(k) = Rational(entry(engine));
    return {m, y, targets};
  }
}

}  // namespace npenta::testing
