#include "gsatlas/invariants.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gsatlas {

Bipartition Bipartition::of(int n, uint32_t subset) {
  uint32_t full = (1u << n) - 1;
  subset &= full;
  if (subset == 0 || subset == full)
    throw std::invalid_argument("bipartition: side must be a nonempty proper subset");
  int a = std::popcount(subset);
  if (2 * a > n || (2 * a == n && !(subset & 1u))) subset = full & ~subset;
  return Bipartition{subset};
}

std::vector<Bipartition> all_bipartitions(int n) {
  std::vector<Bipartition> out;
  uint32_t full = (1u << n) - 1;
  for (uint32_t m = 1; m < full; ++m) {
    int a = std::popcount(m);
    if (2 * a < n || (2 * a == n && (m & 1u))) out.push_back(Bipartition{m});
  }
  return out;
}

int gf2_rank(std::span<const uint32_t> rows) {
  uint32_t basis[32] = {};
  int rank = 0;
  for (uint32_t row : rows) {
    while (row) {
      int h = 31 - std::countl_zero(row);
      if (basis[h] == 0) {
        basis[h] = row;
        ++rank;
        break;
      }
      row ^= basis[h];
    }
  }
  return rank;
}

int schmidt_rank(const Graph& g, Bipartition bp) {
  uint32_t a = bp.a_mask & g.vertex_mask();
  uint32_t b = g.vertex_mask() & ~a;
  if (a == 0 || b == 0) throw std::invalid_argument("schmidt_rank: invalid bipartition");
  uint32_t rows[Graph::max_vertices];
  int count = 0;
  for (uint32_t m = a; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    rows[count++] = g.neighbors(v) & b;
  }
  return gf2_rank(std::span<const uint32_t>(rows, count));
}

const std::vector<int>& RankIndexSet::tuple(int p) const {
  auto it = ri.find(p);
  if (it == ri.end()) throw std::out_of_range("rank index: no tuple for p=" + std::to_string(p));
  return it->second;
}

RankIndexSet rank_indexes(const Graph& g) {
  int n = g.size();
  RankIndexSet out;
  for (int p = 1; p <= n / 2; ++p) out.ri[p] = std::vector<int>(p, 0);
  for (const Bipartition& bp : all_bipartitions(n)) {
    int p = std::popcount(bp.a_mask);
    int r = schmidt_rank(g, bp);
    out.ri[p][p - r] += 1;  // tuple lists ranks p down to 1
  }
  return out;
}

int sr_max(const Graph& g) {
  int best = 0;
  for (const Bipartition& bp : all_bipartitions(g.size()))
    best = std::max(best, schmidt_rank(g, bp));
  return best;
}

int min_vertex_cover(const Graph& g) {
  int n = g.size();
  if (g.edge_count() == 0) return 0;
  for (int k = 1; k < n; ++k) {
    // Gosper's hack over all masks of popcount k.
    uint32_t m = (1u << k) - 1;
    while (m < (1u << n)) {
      bool covers = true;
      for (uint32_t rest = g.vertex_mask() & ~m; rest && covers;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        covers = (g.neighbors(v) & ~m) == 0;
      }
      if (covers) return k;
      uint32_t c = m & -m;
      uint32_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return n;
}

Graph pauli_measure(const Graph& g, int v, PauliBasis basis, int b0) {
  uint32_t nb = g.neighbors(v);  // validates v
  if (nb == 0) return delete_vertex(g, v);
  switch (basis) {
    case PauliBasis::Z:
      return delete_vertex(g, v);
    case PauliBasis::Y:
      return delete_vertex(local_complement(g, v), v);
    case PauliBasis::X: {
      if (b0 < 0 || b0 >= g.size() || !((nb >> b0) & 1u))
        throw std::invalid_argument("pauli_measure: X rule needs b0 in N(v)");
      Graph h = local_complement(local_complement(g, b0), v);
      Graph k = delete_vertex(h, v);
      int b0_shifted = b0 > v ? b0 - 1 : b0;
      return local_complement(k, b0_shifted);
    }
  }
  throw std::invalid_argument("pauli_measure: unknown basis");
}

std::optional<int> PersistencyCache::find(const CanonicalForm& f) const {
  std::scoped_lock lock(mutex_);
  auto it = table_.find(f);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void PersistencyCache::insert(const CanonicalForm& f, int value) {
  std::scoped_lock lock(mutex_);
  table_.emplace(f, value);
}

size_t PersistencyCache::size() const {
  std::scoped_lock lock(mutex_);
  return table_.size();
}

namespace {

int persistency_connected(const Graph& g, PersistencyCache& cache);

int persistency_sum(const Graph& g, PersistencyCache& cache) {
  int total = 0;
  for (const Graph& c : connected_components(g))
    if (c.size() >= 2) total += persistency_connected(c, cache);
  return total;
}

int persistency_connected(const Graph& g, PersistencyCache& cache) {
  if (g.edge_count() == 0) return 0;
  CanonicalForm f = canonical_form(g);
  if (std::optional<int> hit = cache.find(f)) return *hit;
  Graph c = to_graph(f);
  int n = c.size();
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v) {
    uint32_t nb = c.neighbors(v);
    if (nb == 0) continue;  // measuring an isolated vertex never helps
    best = std::min(best, persistency_sum(pauli_measure(c, v, PauliBasis::Z), cache));
    best = std::min(best, persistency_sum(pauli_measure(c, v, PauliBasis::Y), cache));
    for (uint32_t m = nb; m;) {
      int b0 = std::countr_zero(m);
      m &= m - 1;
      best = std::min(best, persistency_sum(pauli_measure(c, v, PauliBasis::X, b0), cache));
    }
  }
  int result = 1 + best;
  cache.insert(f, result);
  return result;
}

}  // namespace

int pauli_persistency(const Graph& g, PersistencyCache& cache) {
  if (g.size() > 8) throw std::invalid_argument("pauli_persistency: supported for n <= 8");
  return persistency_sum(g, cache);
}

int pauli_persistency(const Graph& g) {
  PersistencyCache cache;
  return pauli_persistency(g, cache);
}

bool is_two_colorable(const Graph& g) {
  int n = g.size();
  int color[Graph::max_vertices];
  std::fill(color, color + n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    uint32_t stack = 1u << s;
    while (stack) {
      int v = std::countr_zero(stack);
      stack &= stack - 1;
      for (uint32_t m = g.neighbors(v); m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack |= 1u << u;
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool orbit_two_colorable(const OrbitRecord& orbit) {
  for (const CanonicalForm& f : orbit.members)
    if (is_two_colorable(to_graph(f))) return true;
  return false;
}

MeasureBounds two_colorable_bounds(const Graph& g) {
  if (!is_two_colorable(g))
    throw std::invalid_argument("two_colorable_bounds: graph is not 2-colorable");
  int n = g.size();
  uint32_t rows[Graph::max_vertices];
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
  int rank = gf2_rank(std::span<const uint32_t>(rows, n));
  MeasureBounds b;
  b.lower = (rank + 1) / 2;
  b.upper = n / 2;
  b.provenance = {"2col-rank"};
  if (rank == n) {
    b.lower = b.upper;
    b.provenance.push_back("2col-invertible");
  }
  return b;
}

int odd_cycle_transversal_bound(const Graph& g, PersistencyCache& cache) {
  if (is_two_colorable(g))
    throw std::invalid_argument("odd_cycle_transversal_bound: graph is already 2-colorable");
  if (g.size() > 8) throw std::invalid_argument("odd_cycle_transversal_bound: supported for n <= 8");
  int n = g.size();
  for (int m_removed = 1; m_removed < n; ++m_removed) {
    uint32_t mask = (1u << m_removed) - 1;
    while (mask < (1u << n)) {
      Graph rest = induced_subgraph(g, g.vertex_mask() & ~mask);
      if (is_two_colorable(rest))
        return pauli_persistency(rest, cache) + m_removed;
      uint32_t c = mask & -mask;
      uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::logic_error("odd_cycle_transversal_bound: unreachable");
}

int odd_cycle_transversal_bound(const Graph& g) {
  PersistencyCache cache;
  return odd_cycle_transversal_bound(g, cache);
}

}  // namespace gsatlas
