#include "cli.hpp"

#include "gehm/io.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = gehm::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(GEHM_FIXTURE_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("stats") {
  const Result r = run({"stats", fx("fig2")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["v"] == 4);
  CHECK(j["e"] == 3);
  CHECK(j["f"] == 4);
  CHECK(j["euler_genus"] == 0);
  CHECK(j["orientable"] == true);
  CHECK(j["hyperedge_degrees"] == nlohmann::json::array({2, 3, 4}));
}

TEST_CASE("standard input") {
  const std::string te = R"({"n": 2, "b": [[0, 1]], "g": [[0, 1]], "r": [[0, 1]], "isolates": 0})";
  const Result r = run({"tutte", "-"}, te);
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"tutte"}, te).out == "2\n");
}

TEST_CASE("Tutte polynomial output") {
  CHECK(run({"tutte", "--as-xy", fx("fig6a")}).out == "x + y - 2\n");
  CHECK(run({"tutte", "--as-xy", fx("fig6b")}).out == "x + y - 2\n");
  CHECK(run({"tutte", "--delcon", "--as-xy", fx("fig6b")}).out == "x + y - 2\n");
  CHECK(run({"tutte", "--eval", "2,2", fx("fig2")}).out == "8\n");
  CHECK(run({"tutte", "--eval", "3,1", fx("fig6a")}).out == "2\n");
  const Result json = run({"--json", "dichromatic", fx("fig10-h1")});
  REQUIRE(json.code == 0);
  CHECK(gehm::poly_from_json(nlohmann::json::parse(json.out)) ==
        gehm::MultiPoly::variable("v", 2) + gehm::MultiPoly::monomial(1, {{"u", 3}, {"v", 3}}));
}

TEST_CASE("polynomial subcommands") {
  CHECK(run({"dichromatic", fx("fig10-h2")}).out == run({"dichromatic", "--delcon", fx("fig10-h2")}).out);
  CHECK(run({"transition", fx("fig3")}).out == run({"dichromatic", fx("fig3")}).out);
  CHECK(run({"transition", "--multivariate", fx("fig2")}).out ==
        run({"dichromatic", "--multivariate", fx("fig2")}).out);
  CHECK(run({"whitney", fx("fig10-h1")}).out == "u*v^2 + 2*u*v + v^2 + u + 5*v + 4\n");
  CHECK(run({"hypertrees", fx("fig6b")}).code == 0);
  const Result dump = run({"transition", "--dump-medial", fx("fig2")});
  CHECK(dump.code == 0);
  CHECK(!dump.out.empty());
  CHECK(run({"transition", "--omega-t", "1,1,0", fx("fig2")}).code == 2);
  CHECK(run({"dichromatic", "--multivariate", "--delcon", fx("fig2")}).code == 2);
}

TEST_CASE("operations") {
  CHECK(run({"iso", fx("fig6a"), fx("fig6a")}).out == "true\n");
  CHECK(run({"iso", fx("fig6a"), fx("fig6b")}).out == "false\n");
  const Result d = run({"dual", fx("fig2")});
  CHECK(gehm::parse_gehm(run({"dual", "-"}, d.out).out) == gehm::load_gehm(fx("fig2")));
  const Result pd = run({"pdual", "--edges", "2", fx("fig2")});
  REQUIRE(pd.code == 0);
  const auto s = nlohmann::json::parse(run({"stats", "-"}, pd.out).out);
  CHECK(s["euler_genus"] == 4);
  CHECK(run({"delete", "--edge", "0", fx("fig2")}).code == 0);
  CHECK(run({"contract", "--edge", "9", fx("fig2")}).code == 2);
  CHECK(run({"restrict", "--edges", "0,1", fx("fig2")}).code == 0);
  CHECK(run({"union", fx("fig2"), fx("fig3")}).code == 0);
  const Result j = run({"join", fx("fig6a"), fx("fig6b"), "--gedge", "0,1", "--gedge", "0,1"});
  CHECK(j.code == (j.err.empty() ? 0 : 2));
  CHECK(run({"trial", fx("fig3")}).code == 0);
}

TEST_CASE("random output is deterministic and round-trips") {
  const Result a = run({"random", "--vertices", "10", "--isolates", "1", "--seed", "4"});
  const Result b = run({"random", "--vertices", "10", "--isolates", "1", "--seed", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const std::string canon = run({"canon", "-"}, a.out).out;
  CHECK(run({"canon", "-"}, run({"dual", "-"}, run({"dual", "-"}, a.out).out).out).out == canon);
  CHECK(run({"random", "--vertices", "9"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"stats", "/nonexistent.json"}).code == 2);
  CHECK(run({"stats", "-"}, R"({"n": 2, "b": [[0, 0]], "g": [[0, 1]], "r": [[0, 1]]})").code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--max-edges", "1", "tutte", fx("fig2")}).code == 3);
  CHECK(run({"--max-refinements", "5", "whitney", fx("fig2")}).code == 3);
  CHECK(run({"check", "--suite", "nonsense"}).code == 2);
  // T = 2X + 2Y, and x - 1 = 2 has no rational square root.
  const Result odd = run({"tutte", "--eval", "3,1", "-"},
                         run({"random", "--vertices", "6", "--seed", "1"}).out);
  CHECK(odd.code == 2);
  CHECK(odd.err.find("square root") != std::string::npos);
}

TEST_CASE("edge limit from the environment") {
  ::setenv("GEHM_MAX_EDGES", "1", 1);
  CHECK(run({"tutte", fx("fig2")}).code == 3);
  CHECK(run({"--max-edges", "5", "tutte", fx("fig2")}).code == 0);
  ::setenv("GEHM_MAX_EDGES", "junk", 1);
  CHECK(run({"tutte", fx("fig2")}).code == 2);
  ::unsetenv("GEHM_MAX_EDGES");
  CHECK(run({"tutte", fx("fig2")}).code == 0);
}

TEST_CASE("check command") {
  const Result r = run({"check", "--suite", "all", "--trials", "50", "--max-vertices", "10", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
  CHECK(run({"check", "--suite", "duality", "--trials", "5"}).code == 0);
}
