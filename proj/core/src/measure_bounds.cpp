#include "gsatlas/measure_bounds.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "gsatlas/errors.hpp"
#include "gsatlas/invariants.hpp"

namespace gsatlas {

namespace {

void apply_exact(MeasureBounds& b, int value, const std::string& tag) {
  if (value < b.lower || value > b.upper)
    throw ConsistencyError("measure bounds: rule '" + tag + "' gives " + std::to_string(value) +
                           " outside [" + std::to_string(b.lower) + "," +
                           std::to_string(b.upper) + "]");
  b.lower = b.upper = value;
  b.provenance.push_back(tag);
}

}  // namespace

MeasureBounds orbit_measure_bounds(const OrbitRecord& orbit, PersistencyCache& pp) {
  int n = orbit.representative.size();
  std::vector<Graph> members;
  members.reserve(orbit.members.size());
  for (const CanonicalForm& f : orbit.members) members.push_back(to_graph(f));

  MeasureBounds b;
  b.lower = sr_max(orbit.representative);
  b.provenance.push_back("sr-max");
  int min_pp = n;
  for (const Graph& m : members) min_pp = std::min(min_pp, pauli_persistency(m, pp));
  b.upper = min_pp;
  b.provenance.push_back("pp-min");
  if (b.lower > b.upper)
    throw ConsistencyError("measure bounds: SR_max exceeds min persistency");

  bool has_star = false;
  std::set<int> tree_covers;
  bool invertible_bipartite = false;
  for (const Graph& m : members) {
    if (m.edge_count() == n - 1) {
      if (m.max_degree() == n - 1) has_star = true;
      tree_covers.insert(min_vertex_cover(m));
    }
    if (!invertible_bipartite && is_two_colorable(m)) {
      uint32_t rows[Graph::max_vertices];
      for (int v = 0; v < n; ++v) rows[v] = m.neighbors(v);
      if (gf2_rank(std::span<const uint32_t>(rows, n)) == n) invertible_bipartite = true;
    }
  }
  if (has_star) apply_exact(b, 1, "ghz");
  if (!tree_covers.empty()) {
    if (tree_covers.size() > 1)
      throw ConsistencyError("measure bounds: orbit trees disagree on vertex cover");
    apply_exact(b, *tree_covers.begin(), "tree-vc");
  }
  if (invertible_bipartite) apply_exact(b, n / 2, "2col-invertible");

  for (const Graph& m : members) {
    if (is_two_colorable(m)) continue;
    int cand = odd_cycle_transversal_bound(m, pp);
    if (cand < b.upper) {
      b.upper = cand;
      b.provenance.push_back("odd-cycle-transversal");
      if (b.lower > b.upper)
        throw ConsistencyError("measure bounds: odd-cycle bound below SR_max");
    }
  }
  return b;
}

namespace {

using OrbitIndex = std::unordered_map<CanonicalForm, int, CanonicalFormHash>;
using ComponentRefs = std::vector<std::pair<int, int>>;  // (level, orbit index)

ComponentRefs resolve_components(const Graph& g, const std::map<int, OrbitIndex>& index) {
  ComponentRefs refs;
  for (const Graph& c : connected_components(g)) {
    if (c.size() < 2) continue;  // isolated vertices carry no entanglement
    refs.emplace_back(c.size(), index.at(c.size()).at(canonical_form(c)));
  }
  std::sort(refs.begin(), refs.end());
  return refs;
}

}  // namespace

void propagate_bounds(BoundsAtlas& atlas, int n) {
  std::map<int, OrbitIndex> index;
  for (const auto& [level, orbits] : atlas) {
    if (level > n) continue;
    OrbitIndex oi;
    for (size_t i = 0; i < orbits.size(); ++i)
      for (const CanonicalForm& f : orbits[i].orbit.members) oi.emplace(f, static_cast<int>(i));
    index.emplace(level, std::move(oi));
  }

  std::vector<OrbitBounds>& level = atlas.at(n);
  std::vector<std::set<ComponentRefs>> upper_sources(level.size());
  std::vector<std::set<int>> lower_sources(level.size());
  for (size_t oi = 0; oi < level.size(); ++oi) {
    for (const CanonicalForm& f : level[oi].orbit.members) {
      Graph m = to_graph(f);
      for (int v = 0; v < n; ++v)
        upper_sources[oi].insert(resolve_components(delete_vertex(m, v), index));
      for (auto [i, j] : m.edges()) {
        Graph h = m;
        h.remove_edge(i, j);
        upper_sources[oi].insert(resolve_components(h, index));
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (m.has_edge(i, j)) continue;
          Graph h = m;
          h.add_edge(i, j);
          lower_sources[oi].insert(index.at(n).at(canonical_form(h)));
        }
      }
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t oi = 0; oi < level.size(); ++oi) {
      MeasureBounds& b = level[oi].bounds;
      for (const ComponentRefs& refs : upper_sources[oi]) {
        int cand = 1;
        for (auto [lvl, idx] : refs) cand += atlas.at(lvl)[idx].bounds.upper;
        if (cand < b.upper) {
          b.upper = cand;
          b.provenance.push_back("edge-vertex-rule-upper");
          changed = true;
        }
      }
      for (int src : lower_sources[oi]) {
        int cand = level[src].bounds.lower - 1;
        if (cand > b.lower) {
          b.lower = cand;
          b.provenance.push_back("edge-vertex-rule-lower");
          changed = true;
        }
      }
      if (b.lower > b.upper)
        throw ConsistencyError("propagate_bounds: bounds inverted at n=" + std::to_string(n));
    }
  }
}

}  // namespace gsatlas
