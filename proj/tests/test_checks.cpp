#include "gehm/checks.hpp"
#include "gehm/error.hpp"

#include <doctest.h>

using namespace gehm;

TEST_CASE("suite names") {
  CHECK(suite_names() ==
        std::vector<std::string>{"duality", "delcon", "transition", "evals", "multiplicativity", "structural"});
  CHECK_THROWS_AS(run_suite("nonsense", {}), InvalidArgument);
}

TEST_CASE("every suite passes on the default corpus") {
  CheckOptions opt;
  opt.seed = 7;
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, opt);
    INFO(name);
    CHECK(r.suite == name);
    CHECK(r.checks > 0);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("suites are deterministic") {
  CheckOptions opt;
  opt.trials = 20;
  opt.seed = 3;
  for (const auto& name : suite_names()) {
    const SuiteReport a = run_suite(name, opt), b = run_suite(name, opt);
    CHECK(a.checks == b.checks);
    CHECK(a.notes == b.notes);
  }
}

TEST_CASE("larger corpus") {
  CheckOptions opt;
  opt.trials = 150;
  opt.max_vertices = 14;
  opt.seed = 21;
  for (const auto& name : suite_names()) CHECK(run_suite(name, opt).failures.empty());
}
