#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = superpot::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("gamma fixture") {
  const auto j = run_json({"gamma", "--a", "1,3/2", "--k", "0..8"});
  CHECK(j["command"] == "gamma");
  const std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1},
                                               {3, 2}, {4, 2}, {4, 3}, {5, 3}};
  REQUIRE(j["result"].size() == 9);
  for (std::size_t k = 0; k < 9; ++k) {
    CHECK(j["result"][k]["k"] == k);
    CHECK(j["result"][k]["point"].get<std::vector<int>>() == expected[k]);
  }
}

TEST_CASE("superpotential fixture") {
  const auto j = run_json({"superpotential", "--target", "cp2", "--d", "5", "--a", "13/2+"});
  CHECK(j["result"].dump() == R"({"wt_T":"13","mult":13,"T":"1"})");
  CHECK(j["input"]["params"]["side"] == "plus");
}

TEST_CASE("jumps fixture") {
  CHECK(run_json({"jumps", "--a", "5/4", "--orbits", "2,8"})["result"] == "-1/4");
  const auto all = run_json({"jumps", "--a", "5/4", "--orbits", "2,8", "--route", "all"});
  CHECK(all["result"]["closed"] == "-1/4");
  CHECK(all["result"]["recursive"] == "-1/4");
  CHECK(all["result"]["xi"] == "-1/4");
}

TEST_CASE("spectrum and descendant") {
  const auto s = run_json({"spectrum", "--a", "1,3/2", "--count", "5"});
  CHECK(s["result"][1]["action"] == "3/2");
  CHECK(s["result"][4]["axis"] == 2);
  const auto d = run_json({"descendant", "--a", "1,3", "--orbits", "2"});
  CHECK(d["result"]["value"] == "1/2");
  CHECK(d["result"]["psi_power"] == 1);
}

TEST_CASE("tables and bounds") {
  const auto t = run_json({"table", "--target", "cp2", "--d", "5", "--min", "1", "--max", "20"});
  const auto& iv = t["result"]["intervals"];
  REQUIRE(iv.size() == 6);
  CHECK(iv[5]["hi"] == "inf");
  CHECK(iv[5]["value"] == "3038");
  CHECK(iv[1]["lo"] == "5");
  CHECK(iv[1]["lo_open"] == true);

  const auto csv = run({"table", "--d", "1", "--min", "1", "--max", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "lo,hi,value\n1,2,1\n2,inf,2\n");

  CHECK(run_json({"bound", "--d", "5", "--a", "2,13+"})["result"] == "5/26");
  CHECK(run_json({"bound", "--d", "5", "--a", "3"})["result"] == "no-obstruction");
}

TEST_CASE("suffix and flag forms agree") {
  const auto a = run({"superpotential", "--d", "5", "--a", "13/2+"});
  const auto b = run({"superpotential", "--d", "5", "--a", "13/2", "--side", "plus"});
  CHECK(a.out == b.out);
  const auto c = run({"gamma", "--a", "1,2-", "--k", "2"});
  const auto e = run({"gamma", "--a", "1,2", "--side", "minus", "--k", "2"});
  CHECK(c.out == e.out);
  CHECK(run({"gamma", "--a", "1,2+", "--side", "minus", "--k", "2"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"table", "--d", "4", "--min", "1", "--quantity", "T", "--refine-orbit-id"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out.find('.') == std::string::npos);
}

TEST_CASE("csv output") {
  const auto r = run({"gamma", "--a", "1,3/2", "--k", "0..2", "--format", "csv"});
  CHECK(r.out == "k,point\n0,0;0\n1,1;0\n2,1;1\n");
}

TEST_CASE("invalid input exits 1 with an error object") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gamma", "--a", "1,0", "--k", "2"},
           {"gamma", "--a", "1,x", "--k", "2"},
           {"gamma", "--a", "1,2,3+", "--k", "2"},
           {"superpotential", "--target", "cp3", "--d", "1", "--a", "2"},
           {"table", "--d", "2", "--min", "3", "--max", "2"},
           {"jumps", "--a", "5/4", "--orbits", "2,0"},
           {"check", "--suite", "nope"},
           {"nonsense"},
           {}}) {
    const auto r = run(args);
    CHECK(r.code == 1);
    const auto e = json::parse(r.err);
    CHECK(e["error"]["type"] == "invalid_input");
    CHECK(r.out.empty());
  }
}

TEST_CASE("check suites") {
  CHECK(run_json({"check", "--suite", "gamma", "--bound", "20"})["result"]["ok"] == true);
  CHECK(run_json({"check", "--suite", "genfun", "--bound", "4"})["result"]["ok"] == true);
  CHECK(run_json({"check", "--suite", "jumps", "--bound", "8"})["result"]["ok"] == true);
  CHECK(run_json({"check", "--suite", "linf", "--bound", "3"})["result"]["ok"] == true);
  CHECK(run_json({"check", "--suite", "aug", "--bound", "3", "--length", "3"})["result"]["ok"] == true);
}
