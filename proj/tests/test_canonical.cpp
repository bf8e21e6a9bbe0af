#include <doctest.h>

#include <algorithm>
#include <random>

#include "gsatlas/canonical.hpp"
#include "gsatlas/graph.hpp"

using namespace gsatlas;

namespace {

Graph permute(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.size());
  for (auto [i, j] : g.edges()) out.add_edge(perm[i], perm[j]);
  return out;
}

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Independent oracle: smallest row-major upper-triangle bit string over all
// n! relabelings, by exhaustive enumeration.
uint64_t brute_force_min_string(const Graph& g) {
  int n = g.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  uint64_t best = ~0ull;
  do {
    uint64_t bits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        bits = (bits << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

uint64_t leading_bits(const CanonicalForm& f) {
  int m = f.n * (f.n - 1) / 2;
  return m == 0 ? 0 : f.words[0] >> (64 - m);
}

}  // namespace

TEST_SUITE_BEGIN("canonical");

TEST_CASE("matches exhaustive permutation search on every graph up to n=5") {
  for (int n = 1; n <= 5; ++n) {
    int m = n * (n - 1) / 2;
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
      Graph g(n);
      int p = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
          if ((bits >> (m - 1 - p)) & 1u) g.add_edge(i, j);
      CHECK(leading_bits(canonical_form(g)) == brute_force_min_string(g));
    }
  }
}

TEST_CASE("invariant under relabeling: 1000 random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);  // up to 8
    Graph g = random_graph(rng, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(permute(g, perm)) == canonical_form(g));
  }
}

TEST_CASE("distinguishes non-isomorphic graphs") {
  CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(path_graph(6)));
}

TEST_CASE("star under a random permutation") {
  std::mt19937 rng(11);
  Graph star = star_graph(8);
  std::vector<int> perm = {3, 0, 7, 1, 6, 2, 5, 4};
  CHECK(canonical_form(permute(star, perm)) == canonical_form(star));
}

TEST_CASE("canonical_graph realizes the form and to_graph inverts it") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
    CanonicalForm f = canonical_form(g);
    Graph c = canonical_graph(g);
    CHECK(canonical_form(c) == f);
    CHECK(to_graph(f) == c);
  }
}

TEST_CASE("ordering is stable across word boundaries") {
  // n = 12 has 66 bits, exercising the second word.
  Graph g = cycle_graph(12);
  CanonicalForm f = canonical_form(g);
  CHECK(f.n == 12);
  CHECK(canonical_form(to_graph(f)) == f);
}

TEST_SUITE_END();
