#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npenta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

/// A rational function was evaluated at x = 0 where its denominator vanishes.
class PoleAtZero : public Error {
 public:
  PoleAtZero() : Error("rational function has a pole at x = 0") {}
};

class TooSmall : public Error {
 public:
  explicit TooSmall(std::ptrdiff_t n)
      : Error("system size n = " + std::to_string(n) + " is too small (need n >= 5)"), n_(n) {}
  std::ptrdiff_t size() const noexcept { return n_; }

 private:
  std::ptrdiff_t n_;
};

/// A dense matrix has a nonzero entry outside the nearly pentadiagonal pattern.
/// Coordinates are 1-based.
class NotNearlyPentadiagonal : public Error {
 public:
  NotNearlyPentadiagonal(std::ptrdiff_t row, std::ptrdiff_t col)
      : Error("matrix is not nearly pentadiagonal: nonzero entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  std::ptrdiff_t row() const noexcept { return row_; }
  std::ptrdiff_t col() const noexcept { return col_; }

 private:
  std::ptrdiff_t row_;
  std::ptrdiff_t col_;
};

/// Mismatched vector lengths or malformed shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The specialized LU broke down: pivot c_i vanished (1-based index).
class ZeroPivot : public Error {
 public:
  explicit ZeroPivot(std::ptrdiff_t index)
      : Error("the method is fails: zero pivot c_" + std::to_string(index)), index_(index) {}
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
  explicit SingularMatrix(const std::string& what) : Error("matrix is singular: " + what) {}
};

}  // namespace npenta
