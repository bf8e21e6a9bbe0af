#include "gsatlas/lc_orbit.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gsatlas/enumerate.hpp"
#include "gsatlas/parallel.hpp"

namespace gsatlas {

Graph local_complement(const Graph& g, int v) {
  uint32_t nb = g.neighbors(v);  // validates v
  Graph out = g;
  for (uint32_t m = nb; m;) {
    int i = std::countr_zero(m);
    m &= m - 1;
    for (uint32_t w = nb & ~((2u << i) - 1); w;) {
      int j = std::countr_zero(w);
      w &= w - 1;
      out.toggle_edge(i, j);
    }
  }
  return out;
}

namespace {

std::vector<CanonicalForm> orbit_closure(const Graph& g) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<CanonicalForm> frontier = {canonical_form(g)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& f : frontier) {
      Graph m = to_graph(f);
      for (int v = 0; v < m.size(); ++v) {
        if (m.degree(v) < 2) continue;  // tau is the identity below degree 2
        CanonicalForm fx = canonical_form(local_complement(m, v));
        if (seen.insert(fx).second) next.push_back(fx);
      }
    }
    frontier = std::move(next);
  }
  std::vector<CanonicalForm> members(seen.begin(), seen.end());
  std::sort(members.begin(), members.end());
  return members;
}

OrbitRecord make_record(std::vector<CanonicalForm> members) {
  OrbitRecord rec;
  rec.members = std::move(members);
  rec.lc_size = static_cast<int>(rec.members.size());
  bool first = true;
  int best_edges = 0, best_deg = 0;
  CanonicalForm best_form;
  for (const CanonicalForm& f : rec.members) {
    Graph g = to_graph(f);
    int e = g.edge_count();
    int d = g.max_degree();
    if (first || std::tuple(e, d, f) < std::tuple(best_edges, best_deg, best_form)) {
      first = false;
      best_edges = e;
      best_deg = d;
      best_form = f;
    }
  }
  rec.representative = to_graph(best_form);
  rec.min_edges = best_edges;
  return rec;
}

}  // namespace

OrbitRecord lc_orbit(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("lc_orbit: graph must be connected");
  return make_record(orbit_closure(g));
}

std::vector<OrbitRecord> enumerate_orbits(int n, int jobs) {
  if (n < 2 || n > 8) throw std::invalid_argument("enumerate_orbits: n out of range [2,8]");
  std::vector<CanonicalForm> universe = enumerate_connected_forms(n, jobs);

  std::mutex mutex;
  std::unordered_set<CanonicalForm, CanonicalFormHash> assigned;
  std::vector<OrbitRecord> orbits;
  // Orbits are disjoint, so duplicated closure work between workers is
  // harmless; the first worker to finish claims the whole member set.
  parallel_for(universe.size(), jobs, [&](size_t idx) {
    const CanonicalForm& f = universe[idx];
    {
      std::scoped_lock lock(mutex);
      if (assigned.contains(f)) return;
    }
    std::vector<CanonicalForm> members = orbit_closure(to_graph(f));
    std::scoped_lock lock(mutex);
    if (assigned.contains(f)) return;
    for (const CanonicalForm& m : members) assigned.insert(m);
    orbits.push_back(make_record(std::move(members)));
  });

  std::sort(orbits.begin(), orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    return canonical_form(a.representative) < canonical_form(b.representative);
  });
  return orbits;
}

}  // namespace gsatlas
