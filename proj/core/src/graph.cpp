#include "gsatlas/graph.hpp"

#include <stdexcept>
#include <string>

namespace gsatlas {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices)
    throw std::invalid_argument("graph: vertex count out of range: " + std::to_string(n));
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

int Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("graph: vertex out of range: " + std::to_string(v));
  return v;
}

uint32_t Graph::neighbors(int v) const { return adj_[check_vertex(v)]; }

bool Graph::has_edge(int i, int j) const {
  return (adj_[check_vertex(i)] >> check_vertex(j)) & 1u;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("graph: self-loops not supported");
  adj_[i] |= 1u << j;
  adj_[j] |= 1u << i;
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_[i] &= ~(1u << j);
  adj_[j] &= ~(1u << i);
}

void Graph::toggle_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("graph: self-loops not supported");
  adj_[i] ^= 1u << j;
  adj_[j] ^= 1u << i;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    uint32_t higher = adj_[i] >> (i + 1) << (i + 1);
    while (higher) {
      int j = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

uint32_t component_mask(const Graph& g, int start) {
  uint32_t seen = 1u << start;
  uint32_t frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    uint32_t fresh = g.neighbors(v) & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  return component_mask(g, 0) == g.vertex_mask();
}

bool is_tree(const Graph& g) {
  return g.size() >= 1 && is_connected(g) && g.edge_count() == g.size() - 1;
}

Graph induced_subgraph(const Graph& g, uint32_t keep_mask) {
  keep_mask &= g.vertex_mask();
  std::array<int, Graph::max_vertices> index{};
  int k = 0;
  for (int v = 0; v < g.size(); ++v)
    if ((keep_mask >> v) & 1) index[v] = k++;
  Graph out(k);
  for (int v = 0; v < g.size(); ++v) {
    if (!((keep_mask >> v) & 1)) continue;
    uint32_t nb = g.neighbors(v) & keep_mask;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u > v) out.add_edge(index[v], index[u]);
    }
  }
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw std::out_of_range("delete_vertex: vertex out of range");
  return induced_subgraph(g, g.vertex_mask() & ~(1u << v));
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  uint32_t remaining = g.vertex_mask();
  while (remaining) {
    int s = std::countr_zero(remaining);
    uint32_t cm = component_mask(g, s);
    out.push_back(induced_subgraph(g, cm));
    remaining &= ~cm;
  }
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace gsatlas
