#pragma once

// Graph-encoded hypermaps: a properly edge 3-coloured cubic multigraph on the
// vertex set {0, ..., n-1}, stored as three fixed-point-free involutions, plus
// a count of isolated g-circles.
//
// Colour-pair cycles carry the hypermap structure:
//   b-r cycles  hyperedges
//   g-r cycles  hypervertices
//   b-g cycles  hyperfaces
// An isolate is both a hypervertex and a hyperface, and its own component.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gehm {

using Vertex = std::uint32_t;

enum class Color : std::uint8_t { b = 0, g = 1, r = 2 };

enum class ColorPair : std::uint8_t { br, gr, bg };

char color_name(Color c);
std::string color_pair_name(ColorPair p);

/// The two colours of a pair, alphabetically first colour first.
std::array<Color, 2> colors_of(ColorPair p);

/// Unvalidated input for Gehm::validate. Entries are signed so that negative
/// and out-of-range partners can be diagnosed.
struct RawMatchings {
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> r;
  std::int64_t isolates = 0;
};

class Gehm {
 public:
  /// The empty gehm: no vertices, no isolates.
  Gehm() = default;

  /// Checks that all three arrays are fixed-point-free involutions of one even
  /// length and that the isolate count is non-negative. Throws InvalidArgument
  /// naming the first violated condition.
  static Gehm validate(const RawMatchings& raw);

  /// Same checks for already-unsigned input.
  Gehm(std::vector<Vertex> b, std::vector<Vertex> g, std::vector<Vertex> r, std::size_t isolates = 0);

  static Gehm isolates_only(std::size_t count) { return Gehm({}, {}, {}, count); }

  std::size_t size() const { return match_[0].size(); }
  std::size_t isolates() const { return isolates_; }

  std::span<const Vertex> matching(Color c) const { return match_[static_cast<std::size_t>(c)]; }
  Vertex partner(Color c, Vertex v) const { return match_[static_cast<std::size_t>(c)][v]; }

  friend bool operator==(const Gehm&, const Gehm&) = default;

 private:
  std::array<std::vector<Vertex>, 3> match_;
  std::size_t isolates_ = 0;
};

/// One alternating two-colour cycle. `vertices` starts at the cycle's minimum
/// vertex and first steps along the alphabetically first colour of the pair.
struct ColoredCycle {
  ColorPair pair;
  std::vector<Vertex> vertices;

  std::size_t degree() const { return vertices.size() / 2; }
};

/// Cycles of the two-coloured subgraph, sorted by minimum vertex. Isolates
/// are not listed.
std::vector<ColoredCycle> cycles(const Gehm& g, ColorPair pair);

/// Hyperedges (b-r cycles) in the order used for hyperedge indices.
inline std::vector<ColoredCycle> hyperedges(const Gehm& g) { return cycles(g, ColorPair::br); }

/// For each vertex, the index of the pair-cycle containing it.
std::vector<std::size_t> cycle_index(const Gehm& g, ColorPair pair);

struct GehmStats {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t euler_genus = 0;
  bool orientable = true;
  std::vector<std::size_t> hyperedge_degrees;  // in hyperedge index order
};

GehmStats stats(const Gehm& g);

/// Number of connected components of the cubic graph, isolates excluded.
std::size_t graph_components(const Gehm& g);

struct Orientation {
  std::vector<std::uint8_t> side;  // 0 or 1 per vertex
};

/// Bipartiteness of the cubic multigraph; on success also returns a proper
/// vertex 2-colouring.
std::optional<Orientation> orientation(const Gehm& g);
inline bool is_orientable(const Gehm& g) { return orientation(g).has_value(); }

/// A string that is equal for two gehms exactly when a colour-preserving
/// isomorphism maps one onto the other.
std::string canonical_form(const Gehm& g);
bool equivalent(const Gehm& a, const Gehm& b);

/// Connected components; each isolate becomes its own gehm. Vertex indices are
/// compacted in increasing order.
std::vector<Gehm> components(const Gehm& g);

/// The gehm with vertex v renamed to perm[v].
Gehm relabel(const Gehm& g, std::span<const Vertex> perm);

/// Two vertices joined by edges of all three colours.
Gehm triple_edge();

}  // namespace gehm
