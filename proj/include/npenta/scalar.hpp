#pragma once

#include <cmath>
#include <concepts>
#include <string_view>

#include <Eigen/Core>

#include "npenta/rational.hpp"
#include "npenta/rational_function.hpp"

namespace npenta {

using Index = Eigen::Index;

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-realization facts about a scalar field.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr std::string_view name = "float";
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "rational";
};

template <>
struct scalar_traits<RationalFunction> {
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "rational-function";
};

/// Exact comparison to 0.0; tolerances are applied explicitly by callers.
inline bool is_zero(double v) { return v == 0.0; }

/// The operations every algorithm in this library is written against.
template <class S>
concept ScalarField = std::regular<S> && std::constructible_from<S, int> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::same_as<bool>;
  { scalar_traits<S>::is_exact } -> std::convertible_to<bool>;
};

template <ScalarField S>
S zero() {
  return S(0);
}

template <ScalarField S>
S one() {
  return S(1);
}

template <ScalarField S>
constexpr bool is_exact_v = scalar_traits<S>::is_exact;

/// Zero test used for pivots. For inexact fields |v| <= tol; exact fields ignore tol.
template <ScalarField S>
bool is_negligible(const S& v, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return is_zero(v);
  } else {
    using std::abs;
    return is_zero(v) || abs(v) <= tol;
  }
}

}  // namespace npenta
