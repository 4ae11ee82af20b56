#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "npenta/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kData = NPENTA_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "npenta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = npenta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "npenta_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

json one_to_n_json(int n) {
  json x = json::array();
  for (int k = 1; k <= n; ++k) x.push_back(std::to_string(k));
  return x;
}

}  // namespace

TEST_CASE("solve the worked examples") {
  const auto first = run({"solve", kData + "/worked.json"});
  REQUIRE(first.code == 0);
  const json a = json::parse(first.out);
  CHECK(a["x"] == one_to_n_json(10));
  CHECK(a["det"] == "-145151505");
  CHECK(a["mode"] == "exact");
  CHECK(a["zero_pivots"] == json::array());

  const auto second = run({"solve", kData + "/zero_leading_pivot.json"});
  REQUIRE(second.code == 0);
  const json b = json::parse(second.out);
  CHECK(b["x"] == one_to_n_json(10));
  CHECK(b["det"] == "61394805");
  CHECK(b["mode"] == "symbolic");
  CHECK(b["zero_pivots"] == json::array({1}));

  const auto exact = run({"solve", kData + "/zero_leading_pivot.json", "--mode", "exact"});
  CHECK(exact.code == 3);
  CHECK(exact.err.find("zero pivot c_1") != std::string::npos);

  const auto symbolic = run({"solve", kData + "/worked.json", "--mode", "symbolic"});
  REQUIRE(symbolic.code == 0);
  CHECK(json::parse(symbolic.out)["mode"] == "symbolic");
}

TEST_CASE("output keys come in a fixed order") {
  const auto result = run({"solve", kData + "/identity_5.json"});
  REQUIRE(result.code == 0);
  CHECK(result.out == R"({"x":["5","4","3","2","1"],"det":"1","mode":"exact","zero_pivots":[]})"
                      "\n");
}

TEST_CASE("numeric mode") {
  const auto result = run({"solve", kData + "/worked.json", "--mode", "numeric"});
  REQUIRE(result.code == 0);
  const json doc = json::parse(result.out);
  CHECK(doc["mode"] == "numeric");
  for (int k = 0; k < 10; ++k) CHECK(doc["x"][k].get<double>() == doctest::Approx(k + 1).epsilon(1e-12));
  CHECK(doc["det"].get<double>() == doctest::Approx(-145151505.0).epsilon(1e-10));
  CHECK(doc["residual_norm"].get<double>() < 1e-9);

  CHECK(run({"solve", kData + "/zero_leading_pivot.json", "--mode", "numeric"}).code == 3);
  CHECK(run({"solve", kData + "/worked.json", "--mode", "numeric", "--tol", "1e9"}).code == 3);
}

TEST_CASE("verbose output") {
  const json knpenta = json::parse(run({"solve", kData + "/worked.json", "-v"}).out);
  REQUIRE(knpenta.contains("pivots"));
  CHECK(knpenta["pivots"][0] == "3");
  CHECK(knpenta["pivots"][9] == "701215/19866");

  const json symbolic = json::parse(run({"solve", kData + "/zero_leading_pivot.json", "--verbose"}).out);
  REQUIRE(symbolic.contains("symbolic"));
  CHECK(symbolic["symbolic"]["x"][0] == "(-4092987/4589918)/(x - 4092987/4589918)");
  CHECK(symbolic["symbolic"]["det"] == "(-68848770*x + 61394805)/(1)");
}

TEST_CASE("det") {
  CHECK(run({"det", kData + "/worked.json"}).out == "-145151505\n");
  CHECK(run({"det", kData + "/zero_leading_pivot.json"}).out == "61394805\n");
  CHECK(run({"det", kData + "/zero_leading_pivot.json", "--mode", "exact"}).code == 3);
  CHECK(run({"det", kData + "/zero_leading_pivot.json", "--mode", "symbolic"}).out == "61394805\n");
  const auto numeric = run({"det", kData + "/worked.json", "--mode", "numeric"});
  CHECK(std::stod(numeric.out) == doctest::Approx(-145151505.0).epsilon(1e-10));
}

TEST_CASE("gen") {
  const auto laplacian = run({"gen", "laplacian", "6"});
  REQUIRE(laplacian.code == 0);
  const json doc = json::parse(laplacian.out);
  CHECK(doc["n"] == 6);
  CHECK(doc["d"] == json::array({-4, -4, -4, -4, -4, -4}));
  CHECK(doc["s"] == 0);

  CHECK(run({"gen", "random", "12", "--seed", "5"}).out == run({"gen", "random", "12", "--seed", "5"}).out);
  CHECK(run({"gen", "random", "12", "--seed", "5"}).out != run({"gen", "random", "12", "--seed", "6"}).out);
  CHECK(run({"gen", "random", "4"}).code == 2);
  CHECK(run({"gen", "laplacian", "3"}).code == 2);
  CHECK(run({"gen", "banded", "10"}).code == 2);

  const fs::path file = scratch("gen_out.json");
  REQUIRE(run({"gen", "random", "9", "--seed", "1", "--nonsingular", "--out", file.string()}).code == 0);
  const auto solved = run({"solve", file.string()});
  REQUIRE(solved.code == 0);
  CHECK(json::parse(solved.out)["x"] == one_to_n_json(9));
}

TEST_CASE("gen then solve") {
  for (const std::string kind : {"laplacian", "random"}) {
    for (int n : {5, 6, 17, 100, 500, 1000}) {
      CAPTURE(kind);
      CAPTURE(n);
      const fs::path file = scratch(kind + "_" + std::to_string(n) + ".json");
      REQUIRE(run({"gen", kind, std::to_string(n), "--seed", "42", "--out", file.string()}).code == 0);
      const auto result = run({"solve", file.string()});
      REQUIRE((result.code == 0 || result.code == 3 || result.code == 4));
      if (result.code == 0) CHECK(json::parse(result.out)["x"] == one_to_n_json(n));
    }
  }
}

TEST_CASE("oracle-solve") {
  const json doc = json::parse(run({"oracle-solve", kData + "/zero_leading_pivot.json"}).out);
  CHECK(doc["x"] == one_to_n_json(10));
  CHECK(doc["det"] == "61394805");
}

TEST_CASE("bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", kData + "/worked.json", "--mode", "fast"}).code == 2);
  CHECK(run({"solve", kData + "/missing.json"}).code == 2);

  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"n\": 5, \"d\": [1, 2";
  CHECK(run({"solve", bad.string()}).code == 2);

  const fs::path floats = scratch("floats.json");
  std::ofstream(floats) << R"({"n":5,"d":[1.5,1,1,1,1],"a":[0,0,0,0],"a_tilde":[0,0,0],)"
                        << R"("b":[0,0,0,0],"b_tilde":[0,0,0],"s":0,"t":0,"y":[1,1,1,1,1]})";
  CHECK(run({"solve", floats.string()}).code == 2);
  CHECK(run({"solve", floats.string(), "--mode", "numeric"}).code == 0);

  const fs::path no_rhs = scratch("no_rhs.json");
  std::ofstream(no_rhs) << R"({"n":5,"d":[1,1,1,1,1],"a":[0,0,0,0],"a_tilde":[0,0,0],)"
                        << R"("b":[0,0,0,0],"b_tilde":[0,0,0],"s":0,"t":0})";
  CHECK(run({"solve", no_rhs.string()}).code == 2);
  CHECK(run({"det", no_rhs.string()}).out == "1\n");
}

TEST_CASE("singular input") {
  const fs::path file = scratch("singular.json");
  std::ofstream(file) << R"({"n":5,"d":[1,2,2,-2,-3],"a":[2,3,7,6],"a_tilde":[3,4,1],)"
                      << R"("b":[1,-1,3,4],"b_tilde":[5,0,8],"s":4,"t":0,"y":[1,2,3,4,5]})";
  CHECK(run({"solve", file.string()}).code == 4);
  CHECK(run({"det", file.string()}).out == "0\n");
}
