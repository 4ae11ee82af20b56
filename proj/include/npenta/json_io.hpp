#pragma once

#include <filesystem>
#include <optional>

#include "json.hpp"
#include "npenta/matrix.hpp"

namespace npenta {

/// A matrix with an optional right-hand side, as read from a system document:
///
///   {"n": 10, "d": [...], "a": [...], "a_tilde": [...], "b": [...],
///    "b_tilde": [...], "s": v, "t": v, "y": [...]}
///
/// "y" is optional. Values are JSON numbers or exact strings "p" / "p/q".
template <ScalarField S>
struct LinearSystem {
  NearlyPentaMatrix<S> matrix;
  std::optional<Vector<S>> rhs;
};

/// Exact reading: integers and "p/q" strings only. Floating-point JSON numbers
/// are rejected with ParseError. Shape problems raise ShapeError or TooSmall.
LinearSystem<Rational> parse_exact_system(const nlohmann::json& doc);

/// Floating-point reading: numbers as doubles; "p/q" strings rounded to nearest.
LinearSystem<double> parse_float_system(const nlohmann::json& doc);

/// Reads and parses a JSON file. Throws ParseError when it cannot be read or is not JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Exact value as "p" or "p/q".
nlohmann::ordered_json exact_to_json(const Rational& q);

/// Integral values that fit a 64-bit integer become JSON numbers, others "p/q" strings.
nlohmann::ordered_json compact_to_json(const Rational& q);

/// Serializes a system document with a fixed key order.
nlohmann::ordered_json system_to_json(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>* y = nullptr);

}  // namespace npenta
