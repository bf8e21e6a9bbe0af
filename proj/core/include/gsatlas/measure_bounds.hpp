#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsatlas/lc_orbit.hpp"

namespace gsatlas {

class PersistencyCache;

// Lower/upper bounds on the Schmidt measure of a graph-state class, with the
// rule tags that produced them.
struct MeasureBounds {
  int lower = 0;
  int upper = 0;
  std::vector<std::string> provenance;

  bool exact() const { return lower == upper; }
};

struct OrbitBounds {
  OrbitRecord orbit;
  MeasureBounds bounds;
};

// Levels keyed by vertex count; level k must be complete before level k+1 is
// built so edge/vertex-rule propagation always has final smaller-n values.
using BoundsAtlas = std::map<int, std::vector<OrbitBounds>>;

// lower = SR_max (LC-invariant), upper = min Pauli persistency over members,
// then the exactness shortcuts: GHZ class -> 1, tree class -> VC(tree),
// 2-colorable member with invertible adjacency -> floor(n/2), and the
// odd-cycle-transversal bound for non-bipartite members. Throws
// ConsistencyError when a shortcut lands outside the current interval.
MeasureBounds orbit_measure_bounds(const OrbitRecord& orbit, PersistencyCache& pp);

// Fixed-point sweep of the edge/vertex rules over level n of the atlas:
//   upper(G) <- min(upper(G), upper(G-e) + 1)
//   upper(G) <- min(upper(G), upper(G-v) + 1)
//   lower(G) <- max(lower(G), lower(G+e) - 1)
// G ranges over orbit members; disconnected deletion results are valued as
// the sum of their components' bounds (isolated vertices contribute zero).
// Monotone, hence terminating; throws ConsistencyError on bound inversion.
void propagate_bounds(BoundsAtlas& atlas, int n);

}  // namespace gsatlas
