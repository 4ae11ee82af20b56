#include "npenta/json_io.hpp"

#include <cmath>
#include <fstream>

#include "npenta/errors.hpp"

namespace npenta {

namespace {

using nlohmann::json;

Rational exact_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  if (v.is_number_float()) {
    throw ParseError(where + ": floating-point value " + v.dump() +
                     " is not accepted in exact mode; write it as a \"p/q\" string");
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string, got " + v.dump());
}

double float_value(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return static_cast<double>(Rational::parse(v.get<std::string>()));
    } catch (const Error& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string, got " + v.dump());
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class S, class Convert>
void read_band(const json& doc, const char* key, Band<S>& band, Convert&& convert) {
  const json& arr = field(doc, key);
  if (!arr.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  if (static_cast<Index>(arr.size()) != band.size()) {
    throw ShapeError(std::string("field \"") + key + "\" has length " + std::to_string(arr.size()) + ", expected " +
                     std::to_string(band.size()));
  }
  for (Index k = 0; k < band.size(); ++k) {
    band.values()(k) = convert(arr[static_cast<std::size_t>(k)], std::string(key) + "[" + std::to_string(k) + "]");
  }
}

template <class S, class Convert>
LinearSystem<S> parse_system(const json& doc, Convert&& convert) {
  if (!doc.is_object()) throw ParseError("system document must be a JSON object");
  const json& n_field = field(doc, "n");
  if (!n_field.is_number_integer()) throw ParseError("field \"n\" must be an integer");
  const Index n = n_field.get<Index>();

  LinearSystem<S> sys{NearlyPentaMatrix<S>(n), std::nullopt};
  NearlyPentaMatrix<S>& m = sys.matrix;
  read_band(doc, "d", m.d_band(), convert);
  read_band(doc, "a", m.a_band(), convert);
  read_band(doc, "a_tilde", m.a_tilde_band(), convert);
  read_band(doc, "b", m.b_band(), convert);
  read_band(doc, "b_tilde", m.b_tilde_band(), convert);
  m.s() = convert(field(doc, "s"), "s");
  m.t() = convert(field(doc, "t"), "t");

  if (doc.contains("y")) {
    Band<S> y(1, n);
    read_band(doc, "y", y, convert);
    sys.rhs = y.values();
  }
  return sys;
}

}  // namespace

LinearSystem<Rational> parse_exact_system(const nlohmann::json& doc) { return parse_system<Rational>(doc, exact_value); }

LinearSystem<double> parse_float_system(const nlohmann::json& doc) { return parse_system<double>(doc, float_value); }

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

nlohmann::ordered_json exact_to_json(const Rational& q) { return q.to_string(); }

nlohmann::ordered_json compact_to_json(const Rational& q) {
  if (q.is_integer() && q.numerator().fits_slong_p()) return q.numerator().get_si();
  return q.to_string();
}

nlohmann::ordered_json system_to_json(const NearlyPentaMatrix<Rational>& m, const Vector<Rational>* y) {
  const auto array = [](const Vector<Rational>& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (Index k = 0; k < v.size(); ++k) out.push_back(compact_to_json(v(k)));
    return out;
  };
  nlohmann::ordered_json doc;
  doc["n"] = m.size();
  doc["d"] = array(m.d_band().values());
  doc["a"] = array(m.a_band().values());
  doc["a_tilde"] = array(m.a_tilde_band().values());
  doc["b"] = array(m.b_band().values());
  doc["b_tilde"] = array(m.b_tilde_band().values());
  doc["s"] = compact_to_json(m.s());
  doc["t"] = compact_to_json(m.t());
  if (y != nullptr) doc["y"] = array(*y);
  return doc;
}

}  // namespace npenta
