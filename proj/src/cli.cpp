#include "npenta/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "npenta/errors.hpp"
#include "npenta/factor.hpp"
#include "npenta/json_io.hpp"
#include "npenta/oracle.hpp"
#include "npenta/symbolic.hpp"

namespace npenta::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Mode { automatic, numeric, exact, symbolic };

const std::map<std::string, Mode> kModeNames{
    {"auto", Mode::automatic}, {"numeric", Mode::numeric}, {"exact", Mode::exact}, {"symbolic", Mode::symbolic}};

struct SolveArgs {
  std::string path;
  Mode mode = Mode::automatic;
  bool verbose = false;
  double tol = 0.0;
};

struct GenArgs {
  std::string kind;
  Index n = 0;
  std::uint64_t seed = 0;
  bool nonsingular = false;
  std::string out_path;
};

ordered_json exact_array(const Vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(exact_to_json(v(k)));
  return out;
}

ordered_json float_array(const Vector<double>& v) {
  ordered_json out = ordered_json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

ordered_json report_json(const SolveReport<Rational>& report) {
  ordered_json doc;
  doc["x"] = exact_array(report.x);
  doc["det"] = exact_to_json(report.det);
  doc["mode"] = std::string(to_string(report.mode));
  doc["zero_pivots"] = report.zero_pivots;
  return doc;
}

ordered_json report_json(const SolveReport<double>& report) {
  ordered_json doc;
  doc["x"] = float_array(report.x);
  doc["det"] = report.det;
  doc["mode"] = std::string(to_string(report.mode));
  doc["zero_pivots"] = report.zero_pivots;
  if (report.residual_norm) doc["residual_norm"] = *report.residual_norm;
  return doc;
}

template <class S>
const Vector<S>& require_rhs(const LinearSystem<S>& sys) {
  if (!sys.rhs) throw ParseError("system document has no \"y\" field");
  return *sys.rhs;
}

template <class S>
ordered_json pivots_json(const NearlyPentaMatrix<S>& m, const SolveOptions& options) {
  const Factorization<S> lu = factorize(m, options);
  ordered_json doc = ordered_json::array();
  for (Index i = 1; i <= lu.n; ++i) {
    if constexpr (std::is_same_v<S, Rational>) {
      doc.push_back(exact_to_json(lu.c(i)));
    } else {
      doc.push_back(lu.c(i));
    }
  }
  return doc;
}

ordered_json symbolic_json(const SymbolicTrace& trace) {
  ordered_json x = ordered_json::array();
  for (Index k = 0; k < trace.x.size(); ++k) x.push_back(trace.x(k).to_string());
  ordered_json doc;
  doc["x"] = x;
  doc["det"] = trace.det.to_string();
  return doc;
}

ordered_json solve_document(const SolveArgs& args) {
  const nlohmann::json doc = read_json_file(args.path);
  const SolveOptions options{args.tol};

  if (args.mode == Mode::numeric) {
    const LinearSystem<double> sys = parse_float_system(doc);
    ordered_json out = report_json(solve_knpenta(sys.matrix, require_rhs(sys), options));
    if (args.verbose) out["pivots"] = pivots_json(sys.matrix, options);
    return out;
  }

  const LinearSystem<Rational> sys = parse_exact_system(doc);
  const Vector<Rational>& y = require_rhs(sys);
  if (args.mode != Mode::symbolic) {
    try {
      ordered_json out = report_json(solve_knpenta(sys.matrix, y));
      if (args.verbose) out["pivots"] = pivots_json(sys.matrix, options);
      return out;
    } catch (const ZeroPivot&) {
      if (args.mode == Mode::exact) throw;
    }
  }
  const SymbolicTrace trace = trace_ksnpenta(sys.matrix, y);
  ordered_json out = report_json(substitute_zero(trace));
  if (args.verbose) out["symbolic"] = symbolic_json(trace);
  return out;
}

std::string det_text(const SolveArgs& args) {
  const nlohmann::json doc = read_json_file(args.path);
  if (args.mode == Mode::numeric) {
    const LinearSystem<double> sys = parse_float_system(doc);
    return nlohmann::json(determinant(factorize(sys.matrix, SolveOptions{args.tol}))).dump();
  }
  const LinearSystem<Rational> sys = parse_exact_system(doc);
  if (args.mode == Mode::symbolic) return symbolic_determinant(sys.matrix).to_string();
  try {
    return determinant(factorize(sys.matrix)).to_string();
  } catch (const ZeroPivot&) {
    if (args.mode == Mode::exact) throw;
    return symbolic_determinant(sys.matrix).to_string();
  }
}

ordered_json gen_document(const GenArgs& args) {
  NearlyPentaMatrix<Rational> m = args.kind == "laplacian" ? gen_laplacian<Rational>(args.n)
                                                            : gen_random(args.n, args.seed, args.nonsingular);
  Vector<Rational> ones_to_n(args.n);
  for (Index k = 0; k < args.n; ++k) ones_to_n(k) = Rational(k + 1);
  const Vector<Rational> y = band_matvec(m, ones_to_n);
  return system_to_json(m, &y);
}

ordered_json oracle_document(const std::string& path) {
  const LinearSystem<Rational> sys = parse_exact_system(read_json_file(path));
  const DenseMatrix<Rational> dense = to_dense(sys.matrix);
  ordered_json out;
  out["x"] = exact_array(dense_solve(dense, require_rhs(sys)));
  out["det"] = exact_to_json(dense_det(dense));
  return out;
}

void add_mode_option(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--mode", args.mode, "auto | numeric | exact | symbolic")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case))
      ->default_str("auto");
  cmd->add_option("--tol", args.tol, "pivot tolerance for numeric mode")->default_val(0.0)->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for nearly pentadiagonal linear systems", "npenta"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve the system in a JSON file");
  solve_cmd->add_option("file", solve_args.path, "system document")->required();
  add_mode_option(solve_cmd, solve_args);
  solve_cmd->add_flag("--verbose,-v", solve_args.verbose, "include pivots or the symbolic solution");

  SolveArgs det_args;
  auto* det_cmd = app.add_subcommand("det", "print the determinant of the matrix in a JSON file");
  det_cmd->add_option("file", det_args.path, "system document")->required();
  add_mode_option(det_cmd, det_args);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "write a test system");
  gen_cmd->add_option("kind", gen_args.kind, "laplacian | random")
      ->required()
      ->check(CLI::IsMember({"laplacian", "random"}));
  gen_cmd->add_option("n", gen_args.n, "system size (n >= 5)")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "seed for random systems")->default_val(0);
  gen_cmd->add_flag("--nonsingular", gen_args.nonsingular, "redraw random systems until nonsingular (O(n^3))");
  gen_cmd->add_option("--out", gen_args.out_path, "output path (default: standard output)");

  std::string oracle_path;
  auto* oracle_cmd = app.add_subcommand("oracle-solve", "solve by dense exact elimination")->group("");
  oracle_cmd->add_option("file", oracle_path, "system document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  }

  try {
    if (*solve_cmd) {
      out << solve_document(solve_args).dump() << "\n";
    } else if (*det_cmd) {
      out << det_text(det_args) << "\n";
    } else if (*gen_cmd) {
      const std::string text = gen_document(gen_args).dump() + "\n";
      if (gen_args.out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(gen_args.out_path);
        if (!file || !(file << text)) {
          err << "error: cannot write " << gen_args.out_path << "\n";
          return kFailure;
        }
      }
    } else if (*oracle_cmd) {
      out << oracle_document(oracle_path).dump() << "\n";
    }
  } catch (const ZeroPivot& ex) {
    err << ex.what() << "\n";
    return kZeroPivot;
  } catch (const SingularMatrix& ex) {
    err << "error: " << ex.what() << "\n";
    return kSingular;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const ShapeError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const TooSmall& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace npenta::cli
