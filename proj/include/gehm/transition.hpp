#pragma once

// Medial maps of gehms and their transition polynomials.
//
// The medial map has one vertex per hyperedge. Its half-edges are identified
// with the gehm-vertices of that hyperedge's b-r cycle, and its edges with the
// non-isolate g-edges: half-edge u is joined to half-edge g(u). Around a medial
// vertex the half-edges h_0, ..., h_{2d-1} alternate with grey gaps (across an
// r-edge, on the hypervertex side) and white gaps (across a b-edge, on the
// hyperface side), starting with a grey gap between h_0 and h_1.

#include "gehm/gehm.hpp"
#include "gehm/invariants.hpp"
#include "gehm/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gehm {

enum class FaceType : std::uint8_t { grey, white };

struct MedialVertex {
  std::size_t hyperedge = 0;
  std::vector<Vertex> half_edges;  // h_0 ... h_{2d-1}
  std::vector<FaceType> gaps;      // gaps[i] lies between h_i and h_{i+1 mod 2d}

  std::size_t degree() const { return half_edges.size(); }
};

struct MedialMap {
  std::vector<MedialVertex> vertices;  // indexed like hyperedges(g)
  std::vector<Vertex> edge_partner;    // half-edge involution, from the g-matching
  std::size_t free_loops = 0;          // isolates of the gehm
};

MedialMap medial_map(const Gehm& g);

/// A perfect pairing of the positions 0..2d-1 around one medial vertex:
/// pairing[i] is the position paired with i.
using Pairing = std::vector<std::uint8_t>;

struct GraphState {
  std::vector<Pairing> pairings;  // one per medial vertex
};

/// Pairs the half-edges across the white gaps (c) or the grey gaps (d).
Pairing c_pairing(const MedialVertex& w);
Pairing d_pairing(const MedialVertex& w);

/// The state with c-pairings at the hyperedges flagged in `contracted` and
/// d-pairings elsewhere.
GraphState cd_state(const MedialMap& m, const std::vector<bool>& contracted);

/// All perfect pairings of 2d positions in lexicographic order of their pair
/// lists; there are (2d-1)!! of them.
std::vector<Pairing> all_pairings(std::size_t positions);

/// Free loops left after smoothing every vertex according to `s`, including
/// the free loops of the medial map itself. Throws InvalidArgument if `s` does
/// not give a valid pairing at every vertex.
std::size_t smooth_count(const MedialMap& m, const GraphState& s);

/// Vertex state weights, listed sparsely: unlisted pairings weigh zero.
struct VertexWeights {
  std::vector<std::pair<Pairing, MultiPoly>> states;
};

struct WeightSystem {
  std::vector<VertexWeights> vertices;  // one per medial vertex
};

/// Pair weights for one vertex: weights[i][j] is the weight of pairing
/// positions i and j together (symmetric).
using PairWeightTable = std::vector<std::vector<MultiPoly>>;

/// Expands pair weights into vertex state weights, the weight of a pairing
/// being the product of its pair weights. Enumerates every pairing, so each
/// vertex degree must be within limits.max_vertex_degree.
WeightSystem from_pair_weights(const MedialMap& m, const std::vector<PairWeightTable>& tables,
                               const Limits& limits = {});

/// Sum over graph states of weight * loop_var^(free loops).
MultiPoly transition_poly(const MedialMap& m, const WeightSystem& weights, const std::string& loop_var);

/// The medial weight system: c-state weight u^(d-1), d-state weight 1, other
/// pairings 0; a degree-2 vertex has its single state weighted 2.
WeightSystem omega_m(const Gehm& g);

/// As omega_m with u replaced by the hyperedge's own variable u_e.
WeightSystem omega_m_multivariate(const Gehm& g);

/// Transition polynomial of the medial map under omega_m, in u and v.
MultiPoly phi_m(const Gehm& g);

/// Gem weight system: c-state alpha, d-state beta, crossing state gamma.
/// Throws InvalidArgument unless every hyperedge has degree 2.
WeightSystem omega_t(const Gehm& g, const MultiPoly& alpha, const MultiPoly& beta, const MultiPoly& gamma);

/// Human-readable listing of medial vertices, half-edges and gap colours.
std::string dump_medial(const MedialMap& m);

}  // namespace gehm
