#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rquant/cli.hpp"
#include "rquant/io.hpp"

using namespace rquant;
namespace fs = std::filesystem;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rquant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rquant::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rquant_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("example, quantize, compare") {
  TempDir dir;
  REQUIRE(invoke({"example", "--family", "line", "--n", "1", "--order", "4", "--out-r", dir / "r.json", "--out-R",
               dir / "R.json"})
              .code == 0);
  const auto q = invoke({"quantize", "--order", "4", "--in", dir / "r.json", "--out", dir / "Q.json", "--report",
                      dir / "rep.json"});
  CHECK(q.code == 0);
  const json rep = io::read_json(dir / "rep.json");
  CHECK(rep["passes"].get<bool>());
  CHECK(rep["classical_limit_matches"].get<bool>());
  CHECK(rep["lie"]["dim_gplus"] == 1);
  CHECK(invoke({"compare", "--a", dir / "Q.json", "--b", dir / "R.json"}).code == 0);
  CHECK(invoke({"verify-quantum", "--in", dir / "Q.json"}).code == 0);
  CHECK(invoke({"verify-classical", "--in", dir / "r.json"}).code == 0);
  REQUIRE(invoke({"classical-limit", "--in", dir / "Q.json", "--out", dir / "lim.json"}).code == 0);
  CHECK(io::read_json(dir / "lim.json") == io::read_json(dir / "r.json"));
}

TEST_CASE("compare uses the common truncation") {
  TempDir dir;
  invoke({"example", "--family", "line", "--n", "2", "--order", "5", "--out-R", dir / "R5.json"});
  invoke({"example", "--family", "line", "--n", "2", "--order", "2", "--out-R", dir / "R2.json"});
  invoke({"example", "--family", "line", "--n", "3", "--order", "2", "--out-R", dir / "S2.json"});
  const auto same = invoke({"compare", "--a", dir / "R5.json", "--b", dir / "R2.json"});
  CHECK(same.code == 0);
  CHECK(json::parse(same.out)["common_order"] == 2);
  const auto diff = invoke({"compare", "--a", dir / "R5.json", "--b", dir / "S2.json"});
  CHECK(diff.code == 1);
  CHECK_FALSE(json::parse(diff.out)["equal"].get<bool>());
}

TEST_CASE("verify-classical on the zero field") {
  TempDir dir;
  io::write_json(dir / "zero.json", io::field_to_json(PolyVectorField::zero(Space({"x", "y"}, 2))));
  const auto r = invoke({"verify-classical", "--in", dir / "zero.json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passes"].get<bool>());
}

TEST_CASE("verify-classical reports broken unitarity") {
  TempDir dir;
  const MPoly x = MPoly::variable("x_1"), y = MPoly::variable("x_2");
  io::write_json(dir / "bad.json", io::field_to_json(PolyVectorField(Space({"x"}, 2), {x * y, x * y})));
  const auto r = invoke({"verify-classical", "--in", dir / "bad.json"});
  CHECK(r.code == 1);
  CHECK(r.err.find("2*x_1*x_2") != std::string::npos);
  CHECK(json::parse(r.out)["unitarity"]["components"]["x_1"][0]["coeff"] == "2/1");
}

TEST_CASE("exit codes") {
  TempDir dir;
  {
    std::ofstream(dir / "junk.json") << "{ not json";
    CHECK(invoke({"verify-classical", "--in", dir / "junk.json"}).code == cli::kParse);
    CHECK(invoke({"verify-classical", "--in", dir / "missing.json"}).code == cli::kParse);
  }
  io::write_json(dir / "line.json", io::field_to_json(PolyVectorField(Space({"x"}, 1), {1})));
  CHECK(invoke({"verify-classical", "--in", dir / "line.json"}).code == cli::kMismatch);

  const MPoly x = MPoly::variable("x_1"), y = MPoly::variable("x_2");
  io::write_json(dir / "nonsol.json", io::field_to_json(PolyVectorField(Space({"x"}, 2), {x * x * y, -(y * y * x)})));
  const auto ex = invoke({"lie-report", "--in", dir / "nonsol.json"});
  CHECK(ex.code == cli::kExtraction);
  CHECK(ex.err.find("x_1") != std::string::npos);
  CHECK(invoke({"quantize", "--in", dir / "nonsol.json"}).code == cli::kExtraction);

  CHECK(invoke({"quantize"}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"quantize", "--in", dir / "nonsol.json", "--order", "0"}).code == cli::kUsage);
  CHECK(invoke({"example", "--family", "permutation"}).code == cli::kUsage);
  CHECK(invoke({"example", "--family", "algebra", "--matrix-c", "1,2"}).code == cli::kParse);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("example families") {
  TempDir dir;
  CHECK(invoke({"example", "--family", "permutation", "--monomial", "2", "--order", "3", "--out-r", dir / "r.json",
             "--out-R", dir / "R.json"})
            .code == 0);
  CHECK(invoke({"quantize", "--order", "3", "--in", dir / "r.json", "--out", dir / "Q.json"}).code == 0);
  CHECK(invoke({"compare", "--a", dir / "Q.json", "--b", dir / "R.json"}).code == 0);

  CHECK(invoke({"example", "--family", "algebra", "--matrix-c", "e11", "--order", "2", "--out-r", dir / "m.json",
             "--out-R", dir / "M.json"})
            .code == 0);
  CHECK(invoke({"verify-quantum", "--in", dir / "M.json"}).code == 0);
  const auto lie = invoke({"lie-report", "--in", dir / "m.json"});
  CHECK(lie.code == 0);
  CHECK(json::parse(lie.out)["dim_gplus"] == 2);

  io::write_json(dir / "alg.json", io::algebra_to_json(AlgebraSpec::scalars(Rat(1, 3))));
  const auto alg = invoke({"example", "--family", "algebra", "--algebra", dir / "alg.json", "--order", "2"});
  CHECK(alg.code == 0);
  CHECK(io::diffeo_from_json(json::parse(alg.out)["R"]) == algebra_R(AlgebraSpec::scalars(Rat(1, 3)), 2));

  io::write_json(dir / "v.json", io::field_to_json(PolyVectorField(Space({"x", "y"}, 1),
                                                                   {MPoly::variable("y"), MPoly(1)})));
  CHECK(invoke({"example", "--family", "permutation", "--field", dir / "v.json", "--out-r", dir / "pr.json"}).code == 0);
  CHECK(invoke({"verify-classical", "--in", dir / "pr.json"}).code == 0);
}

TEST_CASE("emitted files re-parse identically") {
  TempDir dir;
  invoke({"example", "--family", "line", "--n", "3", "--c", "2/5", "--order", "3", "--out-r", dir / "r.json",
       "--out-R", dir / "R.json"});
  const json r = io::read_json(dir / "r.json");
  const json R = io::read_json(dir / "R.json");
  CHECK(io::field_to_json(io::field_from_json(r)) == r);
  CHECK(io::diffeo_to_json(io::diffeo_from_json(R)) == R);
}

TEST_CASE("the installed binary reports exit codes") {
  TempDir dir;
  const std::string bin = RQUANT_CLI_PATH;
  CHECK(std::system((bin + " example --family line --n 1 --order 2 --out-R " + dir / "R.json").c_str()) == 0);
  const int st = std::system((bin + " verify-classical --in " + dir / "none.json" + " 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(st) == cli::kParse);
}

}
