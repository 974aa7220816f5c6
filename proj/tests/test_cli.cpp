#include <catch2/catch_amalgamated.hpp>

#include <hkcore/cli.hpp>

#include <cstdlib>
#include <sstream>

#include "support.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hkcore::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string torus_text() {
  std::ostringstream s;
  hkcore::write_edge_list(support::grid_torus(4), s);
  return s.str();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "--fixture", "octahedron"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"m\":[6,12,8],\"r\":[0,5,7],\"betti\":[1,0,1],\"chi\":2}\n");
  support::TempDir dir("analyze");
  const auto empty = dir.file("empty.edges", "");
  r = run({"analyze", "--input", empty.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"m\":[],\"r\":[],\"betti\":[],\"chi\":0}\n");
  r = run({"analyze", "--fixture", "complete:5", "--max-dim", "1"});
  CHECK(r.out == "{\"m\":[5,10],\"r\":[0,4],\"betti\":[1],\"chi\":-5}\n");
}

TEST_CASE("input errors exit with 1") {
  support::TempDir dir("errors");
  auto r = run({"analyze"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("HKCORE-E01:", 0) == 0);
  r = run({"analyze", "--fixture", "octahedron", "--input", "x.edges"});
  CHECK(r.code == 1);
  r = run({"analyze", "--input", (dir.path() / "missing.edges").string()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("HKCORE-E02:", 0) == 0);
  r = run({"analyze", "--input", dir.file("bad.edges", "1 2\nfoo bar\n").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("HKCORE-E03: line 2") == 0);
  r = run({"analyze", "--fixture", "cube"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("HKCORE-E04:", 0) == 0);
  r = run({"core", "--fixture", "octahedron", "--k", "0"});
  CHECK(r.code == 1);
  r = run({"frobnicate"});
  CHECK(r.code == 1);
  r = run({"analyze", "--fixture", "octahedron", "--threads", "0"});
  CHECK(r.code == 1);
}

TEST_CASE("parse warnings go to stderr") {
  support::TempDir dir("warn");
  auto r = run({"analyze", "--input", dir.file("dup.edges", "1 2\n2 1\n3 3\n").string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("HKCORE-W01:") != std::string::npos);
}

TEST_CASE("index") {
  auto r = run({"index", "--fixture", "sample_fig2", "--k", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  CHECK(first ==
        "{\"node\":1,\"n\":4,\"betti\":[1,0,0],\"chi_i\":0,\"dmax\":true,\"dmin\":false,\"class\":\"trivial\"}");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);
  CHECK(r.out.find("{\"node\":3,\"n\":5,\"betti\":[3,0,0],\"chi_i\":-2,\"dmax\":false,\"dmin\":true,\"class\":\"branchy\"}") !=
        std::string::npos);
}

TEST_CASE("core with log") {
  support::TempDir dir("core");
  const auto log = dir.path() / "peel.log";
  auto r = run({"core", "--fixture", "sample_fig2", "--k", "2", "--log", log.string()});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  CHECK(r.out.find("{\"level\":2,\"nodes\":6,\"edges\":12,\"m\":[6,12,8],\"r\":[0,5,7],\"betti\":[1,0,1],\"chi\":2,"
                   "\"members\":[9,10,11,12,13,14]}") != std::string::npos);
  const auto text = slurp(log);
  CHECK(text.rfind("DEL NODE 4 step=1 idx={3,dmax=2,(1,0,0),0}\nDEL NODE 2 step=1", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
}

TEST_CASE("stuck peel exits with 2 and reports the residual profile") {
  support::TempDir dir("stuck");
  const auto torus = dir.file("torus.edges", torus_text());
  auto r = run({"core", "--input", torus.string()});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("HKCORE-E05:", 0) == 0);
  CHECK(r.err.find("residual {\"betti\":[1,2,1]}") != std::string::npos);
  r = run({"core", "--input", torus.string(), "--strict"});
  CHECK(r.code == 2);
}

TEST_CASE("shell, cavities and rank") {
  auto r = run({"shell", "--fixture", "sample_fig2", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"k\":1,\"nodes\":9,\"edges\":10,\"m\":[9,10],\"r\":[0,8],\"betti\":[1,2],\"chi\":-1,"
        "\"members\":[1,3,5,6,7,8,9,10,14],\"cycles\":[[3,6,7,8],[1,3,6,14,10,9,5]]}\n");
  r = run({"cavities", "--fixture", "orthoplex_boundary:4", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"order\":3,\"nodes\":[1,2,3,4,5,6,7,8],\"structure\":\"minimal\","
                 "\"nesting\":[[1,2],[3,4],[5,6],[7,8]]}\n");
  r = run({"cavities", "--fixture", "complete:4", "--k", "1"});
  CHECK(r.code == 1);
  r = run({"rank", "--fixture", "sample_fig2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"node\":9,\"level\":2,\"betti\":1}\n", 0) == 0);
}

TEST_CASE("fixtures subcommand and output files") {
  support::TempDir dir("fixtures");
  auto r = run({"fixtures"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sample_fig2\n") != std::string::npos);
  const auto out = dir.path() / "oct.edges";
  r = run({"fixtures", "--fixture", "octahedron", "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(hkcore::parse_edge_list(slurp(out)) == hkcore::fixtures::octahedron());
  r = run({"analyze", "--input", out.string(), "--output", (dir.path() / "p.json").string()});
  CHECK(slurp(dir.path() / "p.json") == "{\"m\":[6,12,8],\"r\":[0,5,7],\"betti\":[1,0,1],\"chi\":2}\n");
}

TEST_CASE("datasets must be present and match their counts") {
  support::TempDir dir("data");
  ::setenv("HKCORE_DATA_DIR", dir.path().c_str(), 1);
  auto r = run({"analyze", "--dataset", "cat"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("HKCORE-E08:", 0) == 0);
  dir.file("cat.edges", "1 2\n");
  r = run({"analyze", "--dataset", "cat"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("HKCORE-E04:", 0) == 0);
  ::unsetenv("HKCORE_DATA_DIR");
}

TEST_CASE("outputs are byte-identical across thread counts") {
  for (const char* sub : {"core", "index", "rank", "cavities"}) {
    const auto one = run({sub, "--fixture", "dodecahedron_stellated", "--threads", "1"});
    for (const char* t : {"4", "8"}) {
      const auto many = run({sub, "--fixture", "dodecahedron_stellated", "--threads", t});
      CHECK(many.code == one.code);
      CHECK(many.out == one.out);
      CHECK(many.err == one.err);
    }
  }
}
