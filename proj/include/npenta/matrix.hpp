#pragma once

#include <cstdint>
#include <utility>

#include "npenta/errors.hpp"
#include "npenta/scalar.hpp"

namespace npenta {

/// A vector addressed by the 1-based indices used for the band and
/// factorization symbols (d_1..d_n, b_2..b_n, b~_3..b~_n, ...). This is the
/// only place where those indices are mapped onto 0-based storage.
template <class S>
class Band {
 public:
  Band() = default;
  /// Zero-filled band covering indices first..last (inclusive).
  Band(Index first, Index last) : first_(first), values_(Vector<S>::Constant(last - first + 1, S(0))) {}
  Band(Index first, Vector<S> values) : first_(first), values_(std::move(values)) {}

  S& operator()(Index i) { return values_(i - first_); }
  const S& operator()(Index i) const { return values_(i - first_); }

  Index first() const { return first_; }
  Index last() const { return first_ + values_.size() - 1; }
  Index size() const { return values_.size(); }

  const Vector<S>& values() const { return values_; }
  Vector<S>& values() { return values_; }

  template <class T>
  Band<T> cast() const {
    Vector<T> out(values_.size());
    for (Index k = 0; k < values_.size(); ++k) out(k) = static_cast<T>(values_(k));
    return Band<T>(first_, std::move(out));
  }

  friend bool operator==(const Band& lhs, const Band& rhs) {
    return lhs.first_ == rhs.first_ && lhs.values_.size() == rhs.values_.size() &&
           (lhs.values_.array() == rhs.values_.array()).all();
  }

 private:
  Index first_ = 1;
  Vector<S> values_;
};

/// Nearly pentadiagonal n x n matrix (n >= 5): five bands plus the corner
/// entries s at (1,4) and t at (n,n-3).
///
///   d_1..d_n        main diagonal,          A(i,i)
///   a_1..a_{n-1}    first superdiagonal,    A(i,i+1)
///   a~_1..a~_{n-2}  second superdiagonal,   A(i,i+2)
///   b_2..b_n        first subdiagonal,      A(i,i-1)
///   b~_3..b~_n      second subdiagonal,     A(i,i-2)
///
/// 5n-4 scalars in total. The packed layout that stores s as a_n and t as b_1
/// is not used here; s and t are separate fields.
template <ScalarField S>
class NearlyPentaMatrix {
 public:
  /// All-zero matrix of size n. Throws TooSmall for n < 5.
  explicit NearlyPentaMatrix(Index n)
      : n_(check_size(n)), d_(1, n), a_(1, n - 1), a_tilde_(1, n - 2), b_(2, n), b_tilde_(3, n), s_(0), t_(0) {}

  Index size() const { return n_; }
  static constexpr Index stored_count(Index n) { return 5 * n - 4; }
  Index stored_count() const { return d_.size() + a_.size() + a_tilde_.size() + b_.size() + b_tilde_.size() + 2; }

  S& d(Index i) { return d_(i); }
  const S& d(Index i) const { return d_(i); }
  S& a(Index i) { return a_(i); }
  const S& a(Index i) const { return a_(i); }
  S& a_tilde(Index i) { return a_tilde_(i); }
  const S& a_tilde(Index i) const { return a_tilde_(i); }
  S& b(Index i) { return b_(i); }
  const S& b(Index i) const { return b_(i); }
  S& b_tilde(Index i) { return b_tilde_(i); }
  const S& b_tilde(Index i) const { return b_tilde_(i); }
  S& s() { return s_; }
  const S& s() const { return s_; }
  S& t() { return t_; }
  const S& t() const { return t_; }

  const Band<S>& d_band() const { return d_; }
  const Band<S>& a_band() const { return a_; }
  const Band<S>& a_tilde_band() const { return a_tilde_; }
  const Band<S>& b_band() const { return b_; }
  const Band<S>& b_tilde_band() const { return b_tilde_; }
  Band<S>& d_band() { return d_; }
  Band<S>& a_band() { return a_; }
  Band<S>& a_tilde_band() { return a_tilde_; }
  Band<S>& b_band() { return b_; }
  Band<S>& b_tilde_band() { return b_tilde_; }

  /// Element-wise static_cast into another field, e.g. Rational -> double.
  template <ScalarField T>
  NearlyPentaMatrix<T> cast() const {
    NearlyPentaMatrix<T> out(n_);
    out.d_band() = d_.template cast<T>();
    out.a_band() = a_.template cast<T>();
    out.a_tilde_band() = a_tilde_.template cast<T>();
    out.b_band() = b_.template cast<T>();
    out.b_tilde_band() = b_tilde_.template cast<T>();
    out.s() = static_cast<T>(s_);
    out.t() = static_cast<T>(t_);
    return out;
  }

  friend bool operator==(const NearlyPentaMatrix&, const NearlyPentaMatrix&) = default;

 private:
  static Index check_size(Index n) {
    if (n < 5) throw TooSmall(n);
    return n;
  }

  Index n_;
  Band<S> d_, a_, a_tilde_, b_, b_tilde_;
  S s_, t_;
};

/// True when (row, col) (1-based) is one of the 5n-4 stored positions.
inline bool in_pattern(Index n, Index row, Index col) {
  const Index off = col - row;
  if (off >= -2 && off <= 2) return true;
  return (row == 1 && col == 4) || (row == n && col == n - 3);
}

template <ScalarField S>
DenseMatrix<S> to_dense(const NearlyPentaMatrix<S>& m) {
  const Index n = m.size();
  DenseMatrix<S> out = DenseMatrix<S>::Constant(n, n, S(0));
  // out is 0-based; band symbols are 1-based.
  for (Index i = 1; i <= n; ++i) {
    out(i - 1, i - 1) = m.d(i);
    if (i <= n - 1) out(i - 1, i) = m.a(i);
    if (i <= n - 2) out(i - 1, i + 1) = m.a_tilde(i);
    if (i >= 2) out(i - 1, i - 2) = m.b(i);
    if (i >= 3) out(i - 1, i - 3) = m.b_tilde(i);
  }
  out(0, 3) = m.s();
  out(n - 1, n - 4) = m.t();
  return out;
}

/// Throws TooSmall, ShapeError (non-square) or NotNearlyPentadiagonal with
/// the first offending 1-based coordinate in row-major order.
template <ScalarField S>
NearlyPentaMatrix<S> from_dense(const DenseMatrix<S>& dense) {
  if (dense.rows() != dense.cols()) throw ShapeError("matrix is not square");
  const Index n = dense.rows();
  NearlyPentaMatrix<S> m(n);
  for (Index r = 1; r <= n; ++r) {
    for (Index c = 1; c <= n; ++c) {
      if (!in_pattern(n, r, c) && !is_zero(dense(r - 1, c - 1))) throw NotNearlyPentadiagonal(r, c);
    }
  }
  for (Index i = 1; i <= n; ++i) {
    m.d(i) = dense(i - 1, i - 1);
    if (i <= n - 1) m.a(i) = dense(i - 1, i);
    if (i <= n - 2) m.a_tilde(i) = dense(i - 1, i + 1);
    if (i >= 2) m.b(i) = dense(i - 1, i - 2);
    if (i >= 3) m.b_tilde(i) = dense(i - 1, i - 3);
  }
  m.s() = dense(0, 3);
  m.t() = dense(n - 1, n - 4);
  return m;
}

/// Five-point Laplacian stencil layout: d_i = -4, every off-diagonal band 1, s = t = 0.
template <ScalarField S>
NearlyPentaMatrix<S> gen_laplacian(Index n) {
  NearlyPentaMatrix<S> m(n);
  m.d_band().values().setConstant(S(-4));
  m.a_band().values().setConstant(S(1));
  m.a_tilde_band().values().setConstant(S(1));
  m.b_band().values().setConstant(S(1));
  m.b_tilde_band().values().setConstant(S(1));
  return m;
}

/// Every stored scalar (bands, s and t) drawn uniformly from the integers
/// [-9, 9] with a seeded engine. With ensure_nonsingular, draws are repeated
/// until the exact dense determinant is nonzero; that check is O(n^3).
NearlyPentaMatrix<Rational> gen_random(Index n, std::uint64_t seed, bool ensure_nonsingular = false);

}  // namespace npenta
