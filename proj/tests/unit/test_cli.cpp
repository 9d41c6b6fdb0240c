#include "gbsknot/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = gbsknot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GBSKNOT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("classify exit codes and reports") {
  const Result trefoil = run({"classify", data("trefoil.gbs"), "--json"});
  CHECK(trefoil.code == 0);
  const auto j = nlohmann::ordered_json::parse(trefoil.out);
  CHECK(j["one_knot"]["status"] == "yes");
  CHECK(j["one_knot"]["p"] == 2);
  CHECK(j["one_knot"]["q"] == 3);
  CHECK(j["n_knot_ge3"]["status"] == "yes");
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  const std::vector<std::string> expected_prefix = {
      "input",    "reduced_graph", "shape",      "betti1",      "abelianization",
      "modular",  "one_knot",      "n_knot_ge3", "exceptional", "witnesses"};
  REQUIRE(keys.size() >= expected_prefix.size());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 10) == expected_prefix);
  CHECK(j["witnesses"][0]["verified"] == true);
  CHECK(j["abelianization"]["rank"] == 1);

  const Result loop = run({"classify", data("loop24.gbs"), "--json"});
  CHECK(loop.code == 10);
  const auto l = nlohmann::ordered_json::parse(loop.out);
  CHECK(l["one_knot"]["status"] == "no");
  CHECK(l["n_knot_ge3"]["status"] == "no");

  const Result zero = run({"classify", data("zero_label.gbs")});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("line 1") != std::string::npos);
  CHECK(run({"classify", data("missing.gbs")}).code == 2);
}

TEST_CASE("reports are deterministic") {
  const Result a = run({"classify", data("segment_10_21.gbs"), "--json"});
  const Result b = run({"classify", data("segment_10_21.gbs"), "--json"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("T(10,21)") != std::string::npos);
}

TEST_CASE("word command") {
  CHECK(run({"word", data("bs12.gbs"), "t^-1 a t"}).out == "a^2\n");
  CHECK(run({"word", data("bs12.gbs"), "t^-1 a t", "--equal", "a^2"}).out == "true\n");
  CHECK(run({"word", data("bs23.gbs"), "t", "--elliptic"}).out == "false\n");
  CHECK(run({"word", data("bs23.gbs"), "t^-1 a^2 t", "--elliptic"}).out == "true\n");
  CHECK(run({"word", data("bs23.gbs"), "t^-1 a^2 t", "--elliptic", "--equal", "a"}).code == 2);
  CHECK(run({"word", data("bs23.gbs"), "q^2"}).code == 2);
  CHECK(run({"word", data("bs23.gbs"), "a^"}).code == 2);
}

TEST_CASE("other commands") {
  CHECK(run({"validate", data("trefoil.gbs")}).code == 0);
  CHECK(run({"reduce", data("collapsible.gbs")}).out == "vertex a1\nvertex a3\nedge e2 a1 10 a3 7\n");
  const Result present = run({"present", data("bs23.gbs")});
  CHECK(present.out.find("t^-1 a^2 t a^-3") != std::string::npos);
  CHECK(run({"abelianize", data("loop24.gbs")}).out == "Z + Z_2\n");
  CHECK(run({"abelianize", data("trident.gbs"), "--kill", "c"}).out == "Z_30\n");
  CHECK(run({"modular", data("bs12.gbs")}).out.find("1/2") != std::string::npos);
  const Result witness = run({"witness", data("segment_10_21.gbs")});
  CHECK(witness.code == 0);
  CHECK(witness.out.find("verified: yes") != std::string::npos);
  CHECK(run({"witness", data("trident.gbs")}).code == 10);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("batch mode emits one line per file") {
  const Result batch = run({"classify", GBSKNOT_TEST_DATA});
  CHECK(batch.code == 2);
  std::istringstream lines(batch.out);
  std::string line;
  std::size_t n = 0;
  std::string previous;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::ordered_json::parse(line);
    const std::string file = j["file"];
    CHECK(previous < file);
    previous = file;
    ++n;
  }
  CHECK(n == 23);
  CHECK(run({"classify", GBSKNOT_TEST_DATA}).out == batch.out);
}

TEST_CASE("step budget from the environment") {
  setenv("GBSKNOT_STEP_BUDGET", "3", 1);
  const Result small = run({"word", data("bs12.gbs"), "t^-1 a t a^5 t^-1 a t"});
  CHECK(small.code == 2);
  CHECK(small.err.find("StepBudgetExceeded") != std::string::npos);
  setenv("GBSKNOT_STEP_BUDGET", "abc", 1);
  CHECK(run({"word", data("bs12.gbs"), "a"}).code == 2);
  unsetenv("GBSKNOT_STEP_BUDGET");
  CHECK(run({"word", data("bs12.gbs"), "t^-1 a t a^5 t^-1 a t"}).code == 0);
}
