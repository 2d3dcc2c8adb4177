#pragma once

#include "gehm/gehm.hpp"
#include "gehm/io.hpp"
#include "gehm/poly.hpp"

#include <string>

namespace testing {

inline gehm::Gehm fixture(const std::string& name) {
  return gehm::load_gehm(std::string(GEHM_FIXTURE_DIR) + "/" + name + ".json");
}

inline gehm::MultiPoly var(const std::string& name, int exp = 1) { return gehm::MultiPoly::variable(name, exp); }
inline gehm::MultiPoly num(long c) { return gehm::MultiPoly::constant(c); }

// Two vertices joined by a b-, a g- and an r-edge.
inline gehm::Gehm te() { return gehm::Gehm({1, 0}, {1, 0}, {1, 0}); }

// The gem of a single loop drawn in the plane.
inline gehm::Gehm plane_loop() { return gehm::Gehm({1, 0, 3, 2}, {1, 0, 3, 2}, {3, 2, 1, 0}); }

}  // namespace testing
