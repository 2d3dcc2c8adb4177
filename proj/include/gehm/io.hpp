#pragma once

// On-disk and wire formats.
//
// Gehm JSON:
//   {"n": 2, "b": [[0, 1]], "g": [[0, 1]], "r": [[0, 1]], "isolates": 0}
// Every pair list covers 0..n-1 exactly once; pairs may repeat across colours.
//
// Polynomial JSON: [[coeff, {"var": exp, ...}], ...] in canonical term order.
// Coefficients that fit in a signed 64-bit integer are JSON numbers, larger
// ones are decimal strings.

#include "gehm/gehm.hpp"
#include "gehm/poly.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gehm {

Gehm gehm_from_json(const nlohmann::json& j);
Gehm parse_gehm(std::string_view text);
Gehm read_gehm(std::istream& in);
Gehm load_gehm(const std::filesystem::path& path);

/// Serialises with pairs listed as [i, j], i < j, ordered by i.
std::string to_json_string(const Gehm& g);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace gehm
