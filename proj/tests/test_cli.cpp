#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "coherent/json_io.hpp"

using namespace coherent;
using coherent::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(COHERENT_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("conjugate") {
  const auto r = run({"conjugate", "--parts", "5,4,3,3,2", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"n":5,"parts":[5,5,4,2,1]})"));
  CHECK(run({"conjugate", "--parts", "2"}).out == "{\"n\":2,\"parts\":[1,1]}\n");
  CHECK(run({"conjugate", "--parts", "6", "--n", "5"}).code == 1);
  CHECK(run({"conjugate", "--parts", "1,x"}).code == 1);
}

TEST_CASE("bigraphic") {
  auto j = json::parse(run({"bigraphic", "--a", "2,2,1", "--b", "2,2,1", "--n", "3"}).out);
  CHECK(j["bigraphic"] == true);
  j = json::parse(run({"bigraphic", "--a", "3,3,0", "--b", "1,1,1"}).out);
  CHECK(j["bigraphic"] == false);
  CHECK(j["trace"]["first_failure"] == 2);
  CHECK(run({"bigraphic", "--a", "1"}).code == 1);
}

TEST_CASE("eval") {
  const auto half = write_temp("half.json", R"({"pieces":[{"width":"1/2","height":"1"},{"width":"1/2","height":"0"}]})");
  auto j = json::parse(run({"eval", "--diagram", half, "--k", "2"}).out);
  CHECK(j["value"] == "1/4");
  CHECK(j["value_float"] == "0.25");

  const auto two = write_temp("two.json", R"({"pieces":[{"width":"2/5","height":"1"},{"width":"3/5","height":"2/5"}]})");
  // |X - Y| equals 3/5 exactly on this diagram, so only >= sees the mass.
  j = json::parse(run({"eval", "--diagram", two, "--delta", "3/5", "--strict"}).out);
  CHECK(j["value"] == "0");
  j = json::parse(run({"eval", "--diagram", two, "--delta", "1/2", "--strict"}).out);
  CHECK(j["value"] == "12/25");
  j = json::parse(run({"eval", "--diagram", two, "--delta", "0.6"}).out);
  CHECK(j["value"] == "12/25");

  const auto g = write_temp("g.json", R"({"n": 2, "adj": [[1,1],[0,0]]})");
  CHECK(json::parse(run({"eval", "--graph", g, "--k", "4"}).out)["value"] == "1/16");
  const auto m = write_temp("m.json", R"({"n": 2, "A": [["1/4","1/4"],["0","0"]], "B": [["1/4","1/4"],["1/4","1/4"]]})");
  CHECK(json::parse(run({"eval", "--matrices", m, "--k", "2"}).out)["value"] == "1/4");

  const auto bad = write_temp("bad.json", R"({"pieces":[{"width":"1/2","height":"1"}]})");
  CHECK(run({"eval", "--diagram", bad, "--k", "2"}).code == 1);
  CHECK(run({"eval", "--diagram", "/nonexistent/x.json", "--k", "2"}).code == 1);
  CHECK(run({"eval", "--diagram", half}).code == 1);
  CHECK(run({"eval", "--diagram", half, "--graph", g, "--k", "2"}).code == 1);
  CHECK(run({"eval", "--diagram", half, "--k", "2", "--delta", "1/2"}).code == 1);
}

TEST_CASE("search subcommands") {
  auto r = run({"search", "best", "--n", "4", "--k", "4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["best"] == "243/2048");
  CHECK(j["method"] == "exhaustive");

  j = json::parse(run({"search", "best", "--n", "2", "--k", "2", "--method", "local", "--seed", "9"}).out);
  CHECK(j["best"] == "1/4");
  j = json::parse(run({"search", "best", "--n", "3", "--k", "3", "--method", "graphs"}).out);
  CHECK(j["best"] == "32/243");
  CHECK(j["witness"]["kind"] == "graph");

  j = json::parse(run({"search", "counterexample", "--k", "4", "--n-max", "6"}).out);
  CHECK(j["exceeds_power_bound"] == true);
  CHECK(run({"search", "counterexample", "--k", "3"}).code == 1);

  j = json::parse(run({"search", "tail", "--delta", "3/5", "--resolution", "8"}).out);
  CHECK(j["objective"] == "tail");
  CHECK(j.contains("gap"));

  r = run({"search", "best", "--n", "5", "--k", "3", "--format", "csv"});
  CHECK(r.out.rfind("method,parameter,n,value_exact,value_float,bound,bound_value,satisfied,gap\n", 0) == 0);
  CHECK(r.out.find("exhaustive,k=3,5,") != std::string::npos);

  CHECK(run({"search", "best", "--n", "20", "--k", "2"}).code == 1);
  CHECK(run({"search", "best", "--n", "3", "--k", "2", "--method", "magic"}).code == 1);
  CHECK(run({"search", "tail", "--delta", "1/3"}).code == 1);
}

TEST_CASE("bounds table") {
  const auto r = run({"bounds", "table", "--k-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,parameter,value_exact,value_float\n", 0) == 0);
  CHECK(r.out.find("new_bound,k=3,59/160,0.36875\n") != std::string::npos);
  CHECK(r.out.find("independent_tail,delta=3/5,12/25,0.48\n") != std::string::npos);
  CHECK(run({"bounds", "table", "--delta-grid", "0.9:0.5:0.1"}).code == 1);
  CHECK(run({"bounds", "table", "--delta-grid", "nonsense"}).code == 1);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "zagreb"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS zagreb (66100 checks)\n");
  CHECK(run({"verify", "--suite", "galeryser"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
}

TEST_CASE("usage errors") {
  auto r = run({});
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  r = run({"search", "best", "--n", "3", "--k", "2", "--bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"search", "best", "--n", "9", "--k", "4", "--method", "local", "--seed", "17", "--iters", "500"},
      {"search", "best", "--n", "8", "--k", "5", "--workers", "4"},
      {"search", "counterexample", "--k", "5", "--n-max", "10"},
      {"bounds", "table"},
      {"verify"},
  };
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
  CHECK(run({"search", "best", "--n", "8", "--k", "5", "--workers", "4"}).out ==
        run({"search", "best", "--n", "8", "--k", "5", "--workers", "1"}).out);
}

TEST_CASE("emitted JSON reads back identically") {
  const auto report = run({"search", "counterexample", "--k", "4", "--n-max", "9"}).out;
  const auto j = json::parse(report);
  CHECK(io::to_json(io::search_report_from_json(j)).dump(2) + "\n" == report);
  const auto part = run({"conjugate", "--parts", "4,4,1,0"}).out;
  CHECK(io::to_json(io::partition_from_json(json::parse(part))).dump() + "\n" == part);
}
