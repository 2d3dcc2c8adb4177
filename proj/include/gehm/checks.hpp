#pragma once

// Property suites over seeded random gehms, as run by `gehm check`.

#include "gehm/gehm.hpp"
#include "gehm/invariants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gehm {

struct CheckOptions {
  std::size_t trials = 50;
  std::size_t max_vertices = 10;
  std::uint64_t seed = 1;
  Limits limits;
};

struct Failure {
  std::string property;
  std::string detail;
  std::vector<Gehm> instances;  // shrunk where the property takes one gehm
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;  // observations that are reported, not asserted
};

/// duality, delcon, transition, evals, multiplicativity, structural.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const CheckOptions& options);

}  // namespace gehm
