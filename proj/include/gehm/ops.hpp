#pragma once

// Duality, partial duality and minors of gehms.
//
// Hyperedges are addressed by their index in hyperedges(g). Indices are not
// stable across operations: after a deletion or contraction, enumerate the
// result again (or use the vertex maps returned by the *_mapped variants).

#include "gehm/gehm.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace gehm {

/// A permutation of {b, g, r}; image[c] is the colour c is sent to.
class ColorPermutation {
 public:
  ColorPermutation() : image_{Color::b, Color::g, Color::r} {}
  ColorPermutation(Color image_of_b, Color image_of_g, Color image_of_r);

  static ColorPermutation identity() { return {}; }
  /// (b r): the geometric dual.
  static ColorPermutation dual() { return {Color::r, Color::g, Color::b}; }
  /// (b g r): the trial.
  static ColorPermutation trial() { return {Color::g, Color::r, Color::b}; }

  Color operator()(Color c) const { return image_[static_cast<std::size_t>(c)]; }

 private:
  std::array<Color, 3> image_;
};

/// Recolours every c-edge as a mu(c)-edge.
Gehm recolor(const Gehm& g, const ColorPermutation& mu);
inline Gehm dual(const Gehm& g) { return recolor(g, ColorPermutation::dual()); }
inline Gehm trial(const Gehm& g) { return recolor(g, ColorPermutation::trial()); }

/// Swaps the b- and r-edges on each listed hyperedge. Duplicate indices are
/// ignored; throws InvalidArgument for an index out of range.
Gehm partial_dual(const Gehm& g, std::span<const std::size_t> edges);

struct Minor {
  Gehm gehm;
  /// vertex_map[v] is the index of v in the result, or nullopt if removed.
  std::vector<std::optional<Vertex>> vertex_map;
};

/// Deletes the hyperedges in `deleted` and contracts those in `contracted` in
/// one pass. The two sets must be disjoint. Every vertex of a removed
/// hyperedge disappears; g-chains through removed vertices are rewired so
/// that surviving endpoints become g-adjacent, and each g-chain that closes up
/// without a surviving vertex becomes an isolate.
Minor minor(const Gehm& g, std::span<const std::size_t> deleted, std::span<const std::size_t> contracted);

Minor delete_hyperedge_mapped(const Gehm& g, std::size_t e);
Minor contract_hyperedge_mapped(const Gehm& g, std::size_t e);

/// H \ e: drop the b-edges of e, contract its r-edges, suppress.
Gehm delete_hyperedge(const Gehm& g, std::size_t e);
/// H / e: drop the r-edges of e, contract its b-edges, suppress.
Gehm contract_hyperedge(const Gehm& g, std::size_t e);

/// H restricted to A: every hyperedge outside A deleted.
Gehm restrict_to(const Gehm& g, std::span<const std::size_t> kept);

/// g2's vertices are shifted by g1.size(); isolates add up.
Gehm disjoint_union(const Gehm& g1, const Gehm& g2);

/// A g-edge named by its endpoints in order, x then y.
struct GEdge {
  Vertex x;
  Vertex y;
};

/// Disjoint union with the g-edges x1y1 and x2y2 replaced by x1x2 and y1y2.
/// Throws InvalidArgument if either pair is not a g-edge of its gehm.
Gehm join(const Gehm& g1, GEdge e1, const Gehm& g2, GEdge e2);

/// Index of the hyperedge whose b-r cycle contains v.
std::size_t hyperedge_of(const Gehm& g, Vertex v);

}  // namespace gehm
