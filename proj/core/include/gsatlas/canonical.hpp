#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "gsatlas/graph.hpp"

namespace gsatlas {

// Bumped whenever the canonical labeling algorithm or bit layout changes;
// embedded in cache files so stale canonical keys are never reused.
inline constexpr int canonical_algorithm_version = 1;

// Upper-triangle bit string of the canonically relabeled graph, row-major:
// (0,1),(0,2),...,(0,n-1),(1,2),... with bit (0,1) in the most significant
// position of words[0]. Comparing two forms of equal n as word tuples is
// exactly the bit-string order. Equal for two graphs iff they are isomorphic.
struct CanonicalForm {
  static constexpr int word_count = 8;  // 465 bits cover n = 31

  uint8_t n = 0;
  std::array<uint64_t, word_count> words{};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  size_t operator()(const CanonicalForm& f) const {
    uint64_t h = 1469598103934665603ull ^ f.n;
    for (uint64_t w : f.words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Lexicographically smallest row-major upper-triangle bit string over all
// vertex relabelings (exact search with ordered-partition pruning).
CanonicalForm canonical_form(const Graph& g);

// Relabeled copy of g realizing canonical_form(g).
Graph canonical_graph(const Graph& g);

// Unpack a form back into the graph it encodes.
Graph to_graph(const CanonicalForm& f);

}  // namespace gsatlas
