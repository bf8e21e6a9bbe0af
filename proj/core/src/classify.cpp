#include "gsatlas/classify.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gsatlas/errors.hpp"

#include "gsatlas/graph6.hpp"
#include "gsatlas/orbit_cache.hpp"
#include "gsatlas/parallel.hpp"

namespace gsatlas {

namespace {

std::vector<OrbitRecord> orbits_for_level(int n, const BuildOptions& options) {
  if (options.cache_dir) {
    if (auto cached = load_orbit_cache(*options.cache_dir, n)) return std::move(*cached);
  }
  std::vector<OrbitRecord> orbits = enumerate_orbits(n, options.jobs);
  if (options.cache_dir) store_orbit_cache(*options.cache_dir, n, orbits);
  return orbits;
}

// Table order: |E|, then the lower bound, exact rows before intervals, then
// the rank-index tuples RI_4, RI_3, RI_2 lexicographically, then |LC|, with
// the representative's canonical form as the final deterministic tie-break.
struct SortKey {
  int edges;
  int lower;
  int interval;
  std::vector<int> ri4, ri3, ri2;
  int lc;
  CanonicalForm form;

  auto tie() const { return std::tie(edges, lower, interval, ri4, ri3, ri2, lc, form); }
  bool operator<(const SortKey& o) const { return tie() < o.tie(); }
};

SortKey sort_key(const ClassRecord& r) {
  int n = r.representative.size();
  SortKey k;
  k.edges = r.min_edges;
  k.lower = r.bounds.lower;
  k.interval = r.bounds.exact() ? 0 : 1;
  if (n / 2 >= 4) k.ri4 = r.rank_indexes.tuple(4);
  if (n / 2 >= 3) k.ri3 = r.rank_indexes.tuple(3);
  if (n / 2 >= 2) k.ri2 = r.rank_indexes.tuple(2);
  k.lc = r.lc_size;
  k.form = canonical_form(r.representative);
  return k;
}

std::string ri_tuple_string(const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace

Atlas::Atlas(int n, BoundsAtlas levels, std::map<int, std::vector<ClassRecord>> records)
    : n_(n), levels_(std::move(levels)), records_(std::move(records)) {
  const std::vector<OrbitBounds>& top = levels_.at(n_);
  const std::vector<ClassRecord>& classes = records_.at(n_);
  // Orbits and records are index-aligned only before sorting, so key members
  // through the representative form instead.
  std::unordered_map<CanonicalForm, int, CanonicalFormHash> rep_to_number;
  for (const ClassRecord& r : classes)
    rep_to_number.emplace(canonical_form(r.representative), r.number);
  for (const OrbitBounds& ob : top) {
    int number = rep_to_number.at(canonical_form(ob.orbit.representative));
    for (const CanonicalForm& f : ob.orbit.members) {
      if (!member_class_.emplace(f, number).second)
        throw ConsistencyError("atlas: orbits are not disjoint at n=" + std::to_string(n_));
    }
  }
}

int Atlas::lookup(const Graph& g) const {
  if (g.size() != n_)
    throw std::invalid_argument("lookup: graph has " + std::to_string(g.size()) +
                                " vertices, atlas covers n=" + std::to_string(n_));
  if (!is_connected(g)) throw std::invalid_argument("lookup: graph must be connected");
  auto it = member_class_.find(canonical_form(g));
  if (it == member_class_.end())
    throw std::invalid_argument("lookup: graph is not in the atlas");
  return it->second;
}

Atlas build_atlas(int n, const BuildOptions& options) {
  if (n < 2 || n > 8) throw std::invalid_argument("classify: n out of range [2,8]");

  BoundsAtlas levels;
  PersistencyCache pp;
  for (int k = 2; k <= n; ++k) {
    std::vector<OrbitRecord> orbits = orbits_for_level(k, options);
    std::vector<OrbitBounds> level(orbits.size());
    std::mutex move_mutex;
    parallel_for(orbits.size(), options.jobs, [&](size_t i) {
      MeasureBounds b = orbit_measure_bounds(orbits[i], pp);
      std::scoped_lock lock(move_mutex);
      level[i] = OrbitBounds{std::move(orbits[i]), std::move(b)};
    });
    levels.emplace(k, std::move(level));
    if (options.propagation) propagate_bounds(levels, k);
  }

  std::map<int, std::vector<ClassRecord>> records;
  int next_number = 1;
  for (int k = 2; k <= n; ++k) {
    const std::vector<OrbitBounds>& level = levels.at(k);
    std::vector<ClassRecord> recs(level.size());
    parallel_for(level.size(), options.jobs, [&](size_t i) {
      const OrbitBounds& ob = level[i];
      ClassRecord r;
      r.lc_size = ob.orbit.lc_size;
      r.min_edges = ob.orbit.min_edges;
      r.bounds = ob.bounds;
      r.rank_indexes = rank_indexes(ob.orbit.representative);
      r.two_colorable = orbit_two_colorable(ob.orbit);
      r.representative = ob.orbit.representative;
      recs[i] = std::move(r);
    });
    std::sort(recs.begin(), recs.end(),
              [](const ClassRecord& a, const ClassRecord& b) { return sort_key(a) < sort_key(b); });
    for (ClassRecord& r : recs) r.number = next_number++;
    records.emplace(k, std::move(recs));
  }
  return Atlas(n, std::move(levels), std::move(records));
}

std::vector<ClassRecord> classify(int n, const BuildOptions& options) {
  return build_atlas(n, options).classes();
}

int lookup(const Graph& g, const Atlas& atlas) { return atlas.lookup(g); }

std::string render_schmidt_measure(const MeasureBounds& b) {
  if (b.exact()) return std::to_string(b.lower);
  return std::to_string(b.lower) + "<" + std::to_string(b.upper);
}

void write_table_csv(std::ostream& out, std::span<const ClassRecord> records) {
  out << "no,lc,edges,es,ri4,ri3,ri2,twocol\n";
  for (const ClassRecord& r : records) {
    out << r.number << ',' << r.lc_size << ',' << r.min_edges << ','
        << render_schmidt_measure(r.bounds);
    int n = r.representative.size();
    for (int p = 4; p >= 2; --p) {
      out << ',';
      if (p <= n / 2) out << ri_tuple_string(r.rank_indexes.tuple(p));
    }
    out << ',' << (r.two_colorable ? "yes" : "no") << '\n';
  }
}

void write_atlas_json(std::ostream& out, const Atlas& atlas) {
  nlohmann::ordered_json root;
  root["n"] = atlas.size();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ClassRecord& r : atlas.classes()) {
    nlohmann::ordered_json c;
    c["no"] = r.number;
    c["lc"] = r.lc_size;
    c["edges"] = r.min_edges;
    c["es_lower"] = r.bounds.lower;
    c["es_upper"] = r.bounds.upper;
    int n = r.representative.size();
    for (int p = 4; p >= 2; --p)
      if (p <= n / 2) c["ri" + std::to_string(p)] = r.rank_indexes.tuple(p);
    c["two_colorable"] = r.two_colorable;
    c["representative"] = to_graph6(r.representative);
    classes.push_back(std::move(c));
  }
  root["classes"] = std::move(classes);
  out << root.dump(2) << '\n';
}

}  // namespace gsatlas
