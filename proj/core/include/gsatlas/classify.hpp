#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsatlas/invariants.hpp"
#include "gsatlas/measure_bounds.hpp"

namespace gsatlas {

// One row of the classification: everything the atlas publishes per class.
struct ClassRecord {
  int number = 0;
  int lc_size = 0;
  int min_edges = 0;
  MeasureBounds bounds;
  RankIndexSet rank_indexes;
  bool two_colorable = false;
  Graph representative;
};

struct BuildOptions {
  int jobs = 1;
  bool propagation = true;
  std::optional<std::filesystem::path> cache_dir;
};

// Classification of all levels 2..n. Class numbers are consecutive across
// levels (level 2 starts at 1; level 8 therefore starts at 46).
class Atlas {
 public:
  Atlas(int n, BoundsAtlas levels, std::map<int, std::vector<ClassRecord>> records);

  int size() const { return n_; }
  const std::vector<ClassRecord>& classes() const { return records_.at(n_); }
  const std::vector<ClassRecord>& classes_at(int n) const { return records_.at(n); }
  const BoundsAtlas& levels() const { return levels_; }

  // Class number of the orbit containing g (g connected, g.size() == size()).
  int lookup(const Graph& g) const;

 private:
  int n_;
  BoundsAtlas levels_;
  std::map<int, std::vector<ClassRecord>> records_;
  std::unordered_map<CanonicalForm, int, CanonicalFormHash> member_class_;
};

Atlas build_atlas(int n, const BuildOptions& options = {});

// The level-n records of build_atlas(n).
std::vector<ClassRecord> classify(int n, const BuildOptions& options = {});

int lookup(const Graph& g, const Atlas& atlas);

// "k" when exact, "a<b" otherwise.
std::string render_schmidt_measure(const MeasureBounds& b);

// CSV with header no,lc,edges,es,ri4,ri3,ri2,twocol; tuples semicolon-joined
// inside parentheses. Byte-deterministic for fixed input.
void write_table_csv(std::ostream& out, std::span<const ClassRecord> records);

// JSON atlas for the top level of the classification.
void write_atlas_json(std::ostream& out, const Atlas& atlas);

}  // namespace gsatlas
