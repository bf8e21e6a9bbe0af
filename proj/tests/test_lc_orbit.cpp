#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "gsatlas/enumerate.hpp"
#include "gsatlas/lc_orbit.hpp"

using namespace gsatlas;

TEST_SUITE_BEGIN("lc-orbit");

TEST_CASE("complementing the star center gives the complete graph") {
  CHECK(local_complement(star_graph(8), 0) == complete_graph(8));
}

TEST_CASE("single-vertex neighborhoods are fixed points") {
  Graph p3 = path_graph(3);
  CHECK(local_complement(p3, 0) == p3);
  CHECK(local_complement(p3, 2) == p3);
  CHECK(local_complement(p3, 1) == complete_graph(3));
}

TEST_CASE("involution and connectivity preservation on random graphs") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 200) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1u) g.add_edge(i, j);
    if (!is_connected(g)) continue;
    ++checked;
    int v = static_cast<int>(rng() % n);
    Graph t = local_complement(g, v);
    CHECK(local_complement(t, v) == g);
    CHECK(is_connected(t));
  }
}

TEST_CASE("vertex index is validated") {
  CHECK_THROWS_AS(local_complement(path_graph(3), 3), std::out_of_range);
}

TEST_CASE("orbit of K2") {
  OrbitRecord o = lc_orbit(complete_graph(2));
  CHECK(o.lc_size == 1);
  CHECK(o.min_edges == 1);
  CHECK(o.representative == complete_graph(2));
}

TEST_CASE("orbit of the triangle") {
  OrbitRecord o = lc_orbit(complete_graph(3));
  CHECK(o.lc_size == 2);
  CHECK(o.min_edges == 2);
  CHECK(o.representative == canonical_graph(path_graph(3)));
  std::vector<CanonicalForm> expected = {canonical_form(path_graph(3)),
                                         canonical_form(complete_graph(3))};
  std::sort(expected.begin(), expected.end());
  CHECK(o.members == expected);
}

TEST_CASE("orbit of the 8-star") {
  OrbitRecord o = lc_orbit(star_graph(8));
  CHECK(o.lc_size == 2);
  CHECK(o.min_edges == 7);
  CHECK(o.representative == canonical_graph(star_graph(8)));
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(lc_orbit(Graph(3)), std::invalid_argument);
}

TEST_CASE("orbit closure and membership well-definedness, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const OrbitRecord& o : enumerate_orbits(n)) {
      for (const CanonicalForm& f : o.members) {
        Graph m = to_graph(f);
        for (int v = 0; v < n; ++v) {
          CanonicalForm image = canonical_form(local_complement(m, v));
          CHECK(std::binary_search(o.members.begin(), o.members.end(), image));
        }
        CHECK(lc_orbit(m).members == o.members);
      }
    }
  }
}

TEST_CASE("orbit counts and partition property") {
  const size_t counts[] = {1, 1, 2, 4, 11, 26};   // n = 2..7
  const size_t universe[] = {1, 2, 6, 21, 112, 853};
  for (int n = 2; n <= 7; ++n) {
    std::vector<OrbitRecord> orbits = enumerate_orbits(n, 4);
    CHECK(orbits.size() == counts[n - 2]);
    size_t total = 0;
    for (const OrbitRecord& o : orbits) total += o.lc_size;
    CHECK(total == universe[n - 2]);
  }
}

TEST_CASE("representative minimizes edges then max degree") {
  for (const OrbitRecord& o : enumerate_orbits(6)) {
    int best_edges = Graph::max_vertices * Graph::max_vertices;
    for (const CanonicalForm& f : o.members)
      best_edges = std::min(best_edges, to_graph(f).edge_count());
    CHECK(o.min_edges == best_edges);
    CHECK(o.representative.edge_count() == best_edges);
    int best_deg = Graph::max_vertices;
    for (const CanonicalForm& f : o.members) {
      Graph g = to_graph(f);
      if (g.edge_count() == best_edges) best_deg = std::min(best_deg, g.max_degree());
    }
    CHECK(o.representative.max_degree() == best_deg);
  }
}

TEST_CASE("jobs count does not change the partition") {
  std::vector<OrbitRecord> a = enumerate_orbits(6, 1);
  std::vector<OrbitRecord> b = enumerate_orbits(6, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].members == b[i].members);
    CHECK(a[i].representative == b[i].representative);
  }
}

TEST_SUITE_END();
