#pragma once

#include <vector>

#include "gsatlas/canonical.hpp"
#include "gsatlas/graph.hpp"

namespace gsatlas {

// One canonically labeled representative per isomorphism class of connected
// graphs on n vertices, sorted by CanonicalForm. Built by augmentation: every
// connected graph on n >= 2 vertices arises from a connected graph on n-1
// vertices by attaching one vertex with a nonempty neighborhood.
std::vector<Graph> enumerate_connected(int n, int jobs = 1);
std::vector<CanonicalForm> enumerate_connected_forms(int n, int jobs = 1);

}  // namespace gsatlas
