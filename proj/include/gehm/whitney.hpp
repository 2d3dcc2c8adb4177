#pragma once

// Hyperedge refinements and the Whitney polynomial of Cori and Hetyei.
//
// A hyperedge of degree d carries d r-edges in the cyclic order of its b-r
// cycle. A refinement of the hyperedge is a non-crossing partition of these
// positions; each block becomes one smaller alternating b-r cycle through the
// block's r-edges.

#include "gehm/gehm.hpp"
#include "gehm/invariants.hpp"
#include "gehm/poly.hpp"

#include <cstddef>
#include <vector>

namespace gehm {

using Block = std::vector<std::size_t>;      // increasing positions
using Partition = std::vector<Block>;        // blocks ordered by least element

/// Every non-crossing partition of {0, ..., d-1}; Catalan(d) of them. The
/// order is deterministic: by the block of 0, then recursively.
std::vector<Partition> noncrossing_partitions(std::size_t d);

/// True if `p` partitions {0, ..., d-1} into nonempty non-crossing blocks.
bool is_noncrossing_partition(const Partition& p, std::size_t d);

/// One partition per hyperedge, in hyperedge index order.
struct Refinement {
  std::vector<Partition> partitions;
};

struct RefinedGehm {
  Gehm gehm;
  std::size_t edges = 0;       // e(H_beta), the total block count
  std::size_t components = 0;  // k(H_beta)
};

/// H_beta. Throws InvalidArgument if `beta` does not give a valid partition
/// for every hyperedge.
RefinedGehm refine(const Gehm& g, const Refinement& beta);

/// Number of refinements of g, saturating at UINT64_MAX.
std::uint64_t refinement_count(const Gehm& g);

/// R(H; u, v) = u^(-k(H)) v^(d(H) - v(H)) sum over beta of (uv)^k(H_beta) v^(-e(H_beta)).
/// Throws GuardExceeded when refinement_count(g) > limits.max_refinements.
MultiPoly whitney(const Gehm& g, const Limits& limits = {});

}  // namespace gehm
