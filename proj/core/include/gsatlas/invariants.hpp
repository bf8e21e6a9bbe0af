#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gsatlas/canonical.hpp"
#include "gsatlas/graph.hpp"
#include "gsatlas/lc_orbit.hpp"
#include "gsatlas/measure_bounds.hpp"

namespace gsatlas {

// Bipartite split (A,B), stored as the mask of the smaller side A. When both
// sides have n/2 vertices the side containing vertex 0 is kept, so the
// (A,B) <-> (B,A) identification is unique and there are 2^(n-1) - 1 proper
// splits per graph.
struct Bipartition {
  uint32_t a_mask = 0;

  // Normalizes an arbitrary nonempty proper subset to the convention above.
  static Bipartition of(int n, uint32_t subset);

  bool operator==(const Bipartition&) const = default;
};

// All canonical bipartitions of an n-vertex set, ascending by mask.
std::vector<Bipartition> all_bipartitions(int n);

// Rank over GF(2) of a set of row bitmasks.
int gf2_rank(std::span<const uint32_t> rows);

// Binary rank of the off-diagonal block of the adjacency matrix across the
// split; equals the Schmidt rank of the graph state for that bipartition.
int schmidt_rank(const Graph& g, Bipartition bp);

// ri[p] = (nu_p^p, ..., nu_1^p): how often each Schmidt rank occurs among the
// splits with |A| = p, ranks listed in decreasing order. p runs 1..n/2.
struct RankIndexSet {
  std::map<int, std::vector<int>> ri;

  const std::vector<int>& tuple(int p) const;
  bool operator==(const RankIndexSet&) const = default;
};

RankIndexSet rank_indexes(const Graph& g);
int sr_max(const Graph& g);

// Size of the smallest vertex set incident to every edge (exhaustive,
// increasing subset size).
int min_vertex_cover(const Graph& g);

enum class PauliBasis { X, Y, Z };

// Graph transformation of a local Pauli measurement at v:
//   Z: delete v;  Y: tau_v then delete v;
//   X: tau_b0, then the Y rule at v, then tau_b0 again (b0 a neighbor of v).
// An isolated v is just deleted in every basis. The result lives on the
// remaining vertices, compacted in ascending order.
Graph pauli_measure(const Graph& g, int v, PauliBasis basis, int b0 = -1);

// Memo table for pauli_persistency, keyed by canonical form of connected
// components; shared across a whole run and safe for concurrent use
// (recomputation is harmless, values are deterministic).
class PersistencyCache {
 public:
  std::optional<int> find(const CanonicalForm& f) const;
  void insert(const CanonicalForm& f, int value);
  size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalForm, int, CanonicalFormHash> table_;
};

// Minimal number of local Pauli measurements (over vertex, basis, and X-rule
// neighbor choices) that reaches an edgeless graph; 0 for edgeless input.
// Requires n <= 8.
int pauli_persistency(const Graph& g, PersistencyCache& cache);
int pauli_persistency(const Graph& g);

bool is_two_colorable(const Graph& g);

// True iff any member of the orbit is bipartite.
bool orbit_two_colorable(const OrbitRecord& orbit);

// Bounds for a connected 2-colorable graph: ceil(rank(Gamma)/2) <= E_S <=
// floor(n/2), exact at floor(n/2) when Gamma is invertible over GF(2).
MeasureBounds two_colorable_bounds(const Graph& g);

// For a non-bipartite graph: find the minimal M such that deleting some M
// vertices leaves a bipartite graph, and return upper(G') + M for the first
// such deletion set (masks scanned in ascending order within each M).
int odd_cycle_transversal_bound(const Graph& g, PersistencyCache& cache);
int odd_cycle_transversal_bound(const Graph& g);

}  // namespace gsatlas
