#include "gehm/io.hpp"

#include "gehm/error.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

namespace gehm {

namespace {

std::vector<std::int64_t> involution_from_pairs(const nlohmann::json& pairs, std::int64_t n, char name) {
  if (!pairs.is_array()) throw InvalidArgument(std::string("\"") + name + "\" must be an array of pairs");
  std::vector<std::int64_t> m(static_cast<std::size_t>(n), -1);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw InvalidArgument(std::string("matching ") + name + ": each entry must be a pair [i, j] of integers");
    }
    const auto i = p[0].get<std::int64_t>();
    const auto j = p[1].get<std::int64_t>();
    for (std::int64_t x : {i, j}) {
      if (x < 0 || x >= n) {
        std::ostringstream msg;
        msg << "matching " << name << ": vertex " << x << " outside 0.." << n - 1;
        throw InvalidArgument(msg.str());
      }
    }
    if (i == j) {
      std::ostringstream msg;
      msg << "fixed point in matching " << name << " (vertex " << i << ")";
      throw InvalidArgument(msg.str());
    }
    for (std::int64_t x : {i, j}) {
      if (m[static_cast<std::size_t>(x)] != -1) {
        std::ostringstream msg;
        msg << "matching " << name << ": vertex " << x << " covered twice";
        throw InvalidArgument(msg.str());
      }
    }
    m[static_cast<std::size_t>(i)] = j;
    m[static_cast<std::size_t>(j)] = i;
  }
  for (std::int64_t x = 0; x < n; ++x) {
    if (m[static_cast<std::size_t>(x)] == -1) {
      std::ostringstream msg;
      msg << "matching " << name << ": vertex " << x << " not covered";
      throw InvalidArgument(msg.str());
    }
  }
  return m;
}

}  // namespace

Gehm gehm_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("gehm JSON must be an object");
  for (const char* key : {"n", "b", "g", "r"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("gehm JSON is missing \"") + key + "\"");
  }
  if (!j["n"].is_number_integer()) throw InvalidArgument("\"n\" must be an integer");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0) throw InvalidArgument("\"n\" must be non-negative");
  if (n % 2 != 0) throw InvalidArgument("odd number of vertices: " + std::to_string(n));
  std::int64_t isolates = 0;
  if (j.contains("isolates")) {
    if (!j["isolates"].is_number_integer()) throw InvalidArgument("\"isolates\" must be an integer");
    isolates = j["isolates"].get<std::int64_t>();
  }
  RawMatchings raw;
  raw.b = involution_from_pairs(j["b"], n, 'b');
  raw.g = involution_from_pairs(j["g"], n, 'g');
  raw.r = involution_from_pairs(j["r"], n, 'r');
  raw.isolates = isolates;
  return Gehm::validate(raw);
}

Gehm parse_gehm(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return gehm_from_json(j);
}

Gehm read_gehm(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_gehm(text);
}

Gehm load_gehm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return read_gehm(in);
}

std::string to_json_string(const Gehm& g) {
  std::ostringstream out;
  out << "{\"n\": " << g.size();
  for (Color c : {Color::b, Color::g, Color::r}) {
    out << ", \"" << color_name(c) << "\": [";
    bool first = true;
    for (Vertex v = 0; v < g.size(); ++v) {
      const Vertex w = g.partner(c, v);
      if (w < v) continue;
      out << (first ? "" : ", ") << '[' << v << ", " << w << ']';
      first = false;
    }
    out << ']';
  }
  out << ", \"isolates\": " << g.isolates() << '}';
  return out.str();
}

nlohmann::json to_json(const MultiPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& term : p.terms()) {
    nlohmann::json coeff;
    if (term.coeff >= std::numeric_limits<std::int64_t>::min() &&
        term.coeff <= std::numeric_limits<std::int64_t>::max()) {
      coeff = term.coeff.convert_to<std::int64_t>();
    } else {
      coeff = term.coeff.str();
    }
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [name, e] : term.monomial) mono[name] = e;
    out.push_back(nlohmann::json::array({coeff, mono}));
  }
  return out;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array of terms");
  MultiPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_object()) {
      throw InvalidArgument("polynomial term must be [coeff, {var: exp}]");
    }
    BigInt c;
    if (term[0].is_number_integer()) c = term[0].get<std::int64_t>();
    else if (term[0].is_string()) c = BigInt(term[0].get<std::string>());
    else throw InvalidArgument("polynomial coefficient must be an integer or a decimal string");
    MultiPoly::Monomial m;
    for (const auto& [name, e] : term[1].items()) m.emplace(name, e.get<int>());
    p += MultiPoly::monomial(c, m);
  }
  return p;
}

}  // namespace gehm
