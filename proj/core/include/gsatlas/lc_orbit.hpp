#pragma once

#include <vector>

#include "gsatlas/canonical.hpp"
#include "gsatlas/graph.hpp"

namespace gsatlas {

// Local complementation at v: toggles every edge inside the neighborhood of
// v; edges incident to v and all other edges are untouched. An involution.
Graph local_complement(const Graph& g, int v);

// One equivalence class under local complementation + graph isomorphism.
struct OrbitRecord {
  std::vector<CanonicalForm> members;  // sorted, closed under local complementation
  Graph representative;                // min |E|, then min max degree, then min CanonicalForm
  int lc_size = 0;                     // == members.size()
  int min_edges = 0;                   // |E| of the representative
};

// Closure of {local_complement at every vertex} modulo isomorphism, started
// from a connected graph.
OrbitRecord lc_orbit(const Graph& g);

// Partition of enumerate_connected(n) into LC orbits, sorted by the
// representative's CanonicalForm. Requires 2 <= n <= 8.
std::vector<OrbitRecord> enumerate_orbits(int n, int jobs = 1);

}  // namespace gsatlas
