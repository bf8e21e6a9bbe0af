#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gsatlas {

// Undirected simple graph on at most 31 vertices. Row i of the adjacency
// matrix is the neighborhood bitmask of vertex i; symmetry and a zero
// diagonal are maintained by construction.
class Graph {
 public:
  static constexpr int max_vertices = 31;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int size() const { return n_; }
  uint32_t vertex_mask() const { return (1u << n_) - 1; }
  uint32_t neighbors(int v) const;
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  void toggle_edge(int i, int j);
  int degree(int v) const { return std::popcount(neighbors(v)); }
  int max_degree() const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int check_vertex(int v) const;

  int n_ = 0;
  std::array<uint32_t, max_vertices> adj_{};
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Subgraph induced on the set bits of keep_mask; vertices are compacted in
// ascending original order.
Graph induced_subgraph(const Graph& g, uint32_t keep_mask);
Graph delete_vertex(const Graph& g, int v);

// All connected components (including isolated vertices), compacted, in
// ascending order of their smallest original vertex.
std::vector<Graph> connected_components(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

}  // namespace gsatlas
