#include "gsatlas/canonical.hpp"

#include <bit>
#include <cstdint>
#include <limits>

namespace gsatlas {

namespace {

// Depth-first search over slot assignments. Unassigned vertices live in an
// ordered list of cells; slot k must take a vertex from the first cell, and
// picking v forces every cell to split into (non-neighbors, neighbors) of v,
// which is the lexicographically smallest completion of row k compatible
// with rows 0..k-1. Only candidates realizing the node-minimal row value can
// be optimal; a tight/loose flag against the best complete row tuple prunes
// across subtrees.
struct CanonSearch {
  const Graph* g = nullptr;
  int n = 0;
  bool have_best = false;
  std::array<uint32_t, Graph::max_vertices> best_rows{};
  std::array<uint8_t, Graph::max_vertices> best_order{};
  std::array<uint32_t, Graph::max_vertices> cur_rows{};
  std::array<uint8_t, Graph::max_vertices> cur_order{};

  struct Cells {
    std::array<uint32_t, Graph::max_vertices> mask{};
    int count = 0;
    int total = 0;
  };

  void run() {
    Cells root;
    if (n > 0) {
      root.mask[0] = (1u << n) - 1;
      root.count = 1;
      root.total = n;
    }
    dfs(root, 0, true);
  }

  void commit() {
    best_rows = cur_rows;
    best_order = cur_order;
    have_best = true;
  }

  void dfs(const Cells& cells, int level, bool tight) {
    if (cells.total == 0) {
      if (!have_best) {
        commit();
      } else if (!tight) {
        for (int k = 0; k + 1 < n; ++k) {
          if (cur_rows[k] != best_rows[k]) {
            if (cur_rows[k] < best_rows[k]) commit();
            return;
          }
        }
      }
      return;
    }

    uint32_t first = cells.mask[0];
    uint32_t min_row = std::numeric_limits<uint32_t>::max();
    uint32_t min_cands = 0;
    for (uint32_t c = first; c;) {
      int v = std::countr_zero(c);
      c &= c - 1;
      uint32_t nb = g->neighbors(v);
      uint32_t row = 0;
      for (int i = 0; i < cells.count; ++i) {
        uint32_t m = cells.mask[i];
        if (i == 0) m &= ~(1u << v);
        int eff = std::popcount(m);
        int ones = std::popcount(m & nb);
        row = (row << eff) | ((1u << ones) - 1u);
      }
      if (row < min_row) {
        min_row = row;
        min_cands = 1u << v;
      } else if (row == min_row) {
        min_cands |= 1u << v;
      }
    }

    bool child_tight = tight;
    if (have_best && tight) {
      if (min_row > best_rows[level]) return;
      if (min_row < best_rows[level]) child_tight = false;
    }
    cur_rows[level] = min_row;

    for (uint32_t c = min_cands; c;) {
      int v = std::countr_zero(c);
      c &= c - 1;
      uint32_t nb = g->neighbors(v);
      Cells next;
      next.total = cells.total - 1;
      for (int i = 0; i < cells.count; ++i) {
        uint32_t m = cells.mask[i];
        if (i == 0) m &= ~(1u << v);
        uint32_t non = m & ~nb;
        uint32_t yes = m & nb;
        if (non) next.mask[next.count++] = non;
        if (yes) next.mask[next.count++] = yes;
      }
      cur_order[level] = static_cast<uint8_t>(v);
      dfs(next, level + 1, child_tight);
    }
  }
};

CanonicalForm pack_rows(int n, const std::array<uint32_t, Graph::max_vertices>& rows) {
  CanonicalForm f;
  f.n = static_cast<uint8_t>(n);
  int p = 0;
  for (int k = 0; k + 1 < n; ++k) {
    int bits = n - 1 - k;
    for (int t = bits - 1; t >= 0; --t, ++p) {
      uint64_t bit = (rows[k] >> t) & 1u;
      f.words[p >> 6] |= bit << (63 - (p & 63));
    }
  }
  return f;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonSearch s;
  s.g = &g;
  s.n = g.size();
  s.run();
  return pack_rows(s.n, s.best_rows);
}

Graph canonical_graph(const Graph& g) {
  CanonSearch s;
  s.g = &g;
  s.n = g.size();
  s.run();
  Graph out(g.size());
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (g.has_edge(s.best_order[a], s.best_order[b])) out.add_edge(a, b);
  return out;
}

Graph to_graph(const CanonicalForm& f) {
  int n = f.n;
  Graph g(n);
  int p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      if ((f.words[p >> 6] >> (63 - (p & 63))) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace gsatlas
