#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>

#include "gsatlas/enumerate.hpp"
#include "gsatlas/invariants.hpp"

using namespace gsatlas;

namespace {

// Z-only persistency by exhaustive search; per the measurement rules this
// must equal the minimal vertex cover.
int z_only_persistency(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  int n = g.size();
  int best = n;
  for (int v = 0; v < n; ++v) {
    if (g.neighbors(v) == 0) continue;
    best = std::min(best, 1 + z_only_persistency(pauli_measure(g, v, PauliBasis::Z)));
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("bipartition normalization") {
  Bipartition bp = Bipartition::of(8, 0b11110000);
  CHECK(bp.a_mask == 0b00001111u);  // complement is the smaller... equal; side with vertex 0
  CHECK(Bipartition::of(8, 0b00001111).a_mask == 0b00001111u);
  CHECK(Bipartition::of(5, 0b11100).a_mask == 0b00011u);
  CHECK_THROWS_AS(Bipartition::of(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition::of(4, 0b1111), std::invalid_argument);
  CHECK(all_bipartitions(8).size() == 127);  // 2^(n-1) - 1
  CHECK(all_bipartitions(5).size() == 15);
}

TEST_CASE("gf2 rank on hand matrices") {
  const uint32_t rows_identity[] = {1, 2, 4};
  CHECK(gf2_rank(rows_identity) == 3);
  const uint32_t rows_dependent[] = {0b011, 0b101, 0b110};  // r3 = r1 ^ r2
  CHECK(gf2_rank(rows_dependent) == 2);
  const uint32_t rows_zero[] = {0, 0};
  CHECK(gf2_rank(rows_zero) == 0);
}

TEST_CASE("schmidt rank examples") {
  Graph star = star_graph(8);
  for (const Bipartition& bp : all_bipartitions(8)) CHECK(schmidt_rank(star, bp) == 1);

  Graph p3 = path_graph(3);
  CHECK(schmidt_rank(p3, Bipartition::of(3, 0b101)) == 1);  // endpoints vs middle

  Graph c8 = cycle_graph(8);
  // alternating split: the four cross rows sum to zero over GF(2)
  CHECK(schmidt_rank(c8, Bipartition::of(8, 0b01010101)) == 3);
  CHECK(schmidt_rank(c8, Bipartition::of(8, 0b00110011)) == 4);  // two opposite blocks
}

TEST_CASE("schmidt rank is symmetric in the two sides") {
  Graph c8 = cycle_graph(8);
  for (uint32_t m = 1; m < 255; ++m) {
    Bipartition a = Bipartition::of(8, m);
    Bipartition b = Bipartition::of(8, 0xFFu & ~m);
    CHECK(a.a_mask == b.a_mask);  // normalization identifies (A,B) with (B,A)
    CHECK(schmidt_rank(c8, a) == schmidt_rank(c8, b));
  }
}

TEST_CASE("rank indexes of the 8-star and the 8-ring") {
  RankIndexSet star = rank_indexes(star_graph(8));
  CHECK(star.tuple(4) == std::vector<int>{0, 0, 0, 35});
  CHECK(star.tuple(3) == std::vector<int>{0, 0, 56});
  CHECK(star.tuple(2) == std::vector<int>{0, 28});
  CHECK(star.tuple(1) == std::vector<int>{8});

  RankIndexSet ring = rank_indexes(cycle_graph(8));
  CHECK(ring.tuple(4)[0] > 0);  // some split of C8 reaches rank 4
  CHECK(ring.tuple(4) == std::vector<int>{14, 17, 4, 0});
}

TEST_CASE("rank index totals per split size") {
  for (const Graph& g : {cycle_graph(8), star_graph(8), complete_graph(8)}) {
    RankIndexSet ri = rank_indexes(g);
    const int totals[] = {8, 28, 56, 35};  // C(8,p), halved at p = 4
    for (int p = 1; p <= 4; ++p)
      CHECK(std::accumulate(ri.tuple(p).begin(), ri.tuple(p).end(), 0) == totals[p - 1]);
  }
}

TEST_CASE("maximal schmidt rank") {
  CHECK(sr_max(star_graph(8)) == 1);
  CHECK(sr_max(cycle_graph(8)) == 4);
  for (const Graph& g : enumerate_connected(6)) CHECK(sr_max(g) <= 3);
}

TEST_CASE("minimal vertex cover") {
  CHECK(min_vertex_cover(star_graph(8)) == 1);
  CHECK(min_vertex_cover(cycle_graph(8)) == 4);
  CHECK(min_vertex_cover(path_graph(8)) == 4);
  CHECK(min_vertex_cover(Graph(3)) == 0);
  CHECK(min_vertex_cover(complete_graph(8)) == 7);
}

TEST_CASE("pauli measurement rules on small graphs") {
  Graph star = star_graph(8);
  CHECK(pauli_measure(star, 0, PauliBasis::Z).edge_count() == 0);

  Graph p3 = path_graph(3);
  Graph y_mid = pauli_measure(p3, 1, PauliBasis::Y);
  CHECK(y_mid.size() == 2);
  CHECK(y_mid.edge_count() == 1);  // former endpoints joined

  Graph x_leaf = pauli_measure(p3, 0, PauliBasis::X, 1);
  CHECK(x_leaf.size() == 2);
  CHECK(x_leaf.edge_count() == 0);

  CHECK_THROWS_AS(pauli_measure(p3, 0, PauliBasis::X, 2), std::invalid_argument);

  // isolated vertices are simply deleted in any basis
  Graph lonely(3);
  lonely.add_edge(1, 2);
  for (PauliBasis b : {PauliBasis::X, PauliBasis::Y, PauliBasis::Z})
    CHECK(pauli_measure(lonely, 0, b).edge_count() == 1);
}

TEST_CASE("pauli persistency") {
  CHECK(pauli_persistency(star_graph(8)) == 1);   // Z on the center
  CHECK(pauli_persistency(complete_graph(8)) == 1);  // Y anywhere
  CHECK(pauli_persistency(cycle_graph(5)) == 3);
  CHECK(pauli_persistency(cycle_graph(8)) == 4);
  CHECK(pauli_persistency(path_graph(8)) == 4);
  CHECK(pauli_persistency(Graph(4)) == 0);
  CHECK_THROWS_AS(pauli_persistency(Graph(9)), std::invalid_argument);
}

TEST_CASE("persistency cache is shared and consistent") {
  PersistencyCache cache;
  int a = pauli_persistency(cycle_graph(8), cache);
  size_t filled = cache.size();
  CHECK(filled > 0);
  CHECK(pauli_persistency(cycle_graph(8), cache) == a);
  CHECK(cache.size() == filled);
}

TEST_CASE("restricting to Z measurements reproduces the vertex cover, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n))
      CHECK(z_only_persistency(g) == min_vertex_cover(g));
}

TEST_CASE("two-colorability") {
  CHECK(is_two_colorable(path_graph(8)));
  CHECK(is_two_colorable(star_graph(5)));
  CHECK_FALSE(is_two_colorable(cycle_graph(5)));
  CHECK(is_two_colorable(cycle_graph(8)));
}

TEST_CASE("two-colorable bounds") {
  MeasureBounds p8 = two_colorable_bounds(path_graph(8));
  CHECK(p8.lower == 4);
  CHECK(p8.upper == 4);
  CHECK(p8.exact());  // invertible adjacency

  MeasureBounds c8 = two_colorable_bounds(cycle_graph(8));
  CHECK(c8.lower == 3);  // rank 6
  CHECK(c8.upper == 4);
  CHECK_FALSE(c8.exact());

  MeasureBounds k44 = two_colorable_bounds(complete_bipartite_graph(4, 4));
  CHECK(k44.lower == 1);  // rank 2
  CHECK(k44.upper == 4);

  CHECK_THROWS_AS(two_colorable_bounds(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("odd cycle transversal bound") {
  CHECK(odd_cycle_transversal_bound(cycle_graph(5)) == 3);  // remove 1 -> P4
  CHECK(odd_cycle_transversal_bound(complete_graph(3)) == 2);
  CHECK_THROWS_AS(odd_cycle_transversal_bound(cycle_graph(8)), std::invalid_argument);
}

TEST_CASE("bound sandwich on every connected graph up to n=6") {
  PersistencyCache cache;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      int lo = sr_max(g);
      int pp = pauli_persistency(g, cache);
      CHECK(lo <= pp);
      CHECK(pp <= min_vertex_cover(g));
    }
  }
}

TEST_CASE("trees: persistency equals the vertex cover, n <= 7") {
  PersistencyCache cache;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (is_tree(g)) CHECK(pauli_persistency(g, cache) == min_vertex_cover(g));
}

TEST_CASE("rank indexes are LC-invariant across orbits, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const OrbitRecord& o : enumerate_orbits(n)) {
      RankIndexSet expected = rank_indexes(o.representative);
      for (const CanonicalForm& f : o.members) CHECK(rank_indexes(to_graph(f)) == expected);
    }
  }
}

TEST_CASE("orbit two-colorability") {
  CHECK(orbit_two_colorable(lc_orbit(star_graph(8))));     // class 46
  CHECK(orbit_two_colorable(lc_orbit(complete_graph(8))));  // same orbit as the star
  CHECK(orbit_two_colorable(lc_orbit(cycle_graph(8))));
  CHECK_FALSE(orbit_two_colorable(lc_orbit(cycle_graph(5))));
}

TEST_SUITE_END();
