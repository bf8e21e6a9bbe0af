#include "gsatlas/orbit_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "gsatlas/graph6.hpp"

namespace gsatlas {

namespace {

std::string cache_header(int n, size_t orbits) {
  std::ostringstream os;
  os << "gsatlas-orbits v1 canon=" << canonical_algorithm_version << " n=" << n
     << " orbits=" << orbits;
  return os.str();
}

}  // namespace

std::filesystem::path orbit_cache_path(const std::filesystem::path& dir, int n) {
  return dir / ("orbits-n" + std::to_string(n) + ".txt");
}

std::optional<std::vector<OrbitRecord>> load_orbit_cache(const std::filesystem::path& dir, int n) {
  std::ifstream in(orbit_cache_path(dir, n));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;

  size_t expected = 0;
  {
    std::istringstream hs(line);
    std::string magic, version, canon_tag, n_tag, orbits_tag;
    hs >> magic >> version >> canon_tag >> n_tag >> orbits_tag;
    if (magic != "gsatlas-orbits" || version != "v1" ||
        canon_tag != "canon=" + std::to_string(canonical_algorithm_version) ||
        n_tag != "n=" + std::to_string(n) || orbits_tag.rfind("orbits=", 0) != 0)
      return std::nullopt;
    expected = std::stoul(orbits_tag.substr(7));
  }

  std::vector<OrbitRecord> orbits;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string rep_g6;
    int lc = 0;
    if (!(ls >> rep_g6 >> lc) || lc < 1) return std::nullopt;
    OrbitRecord rec;
    rec.representative = from_graph6(rep_g6);
    if (rec.representative.size() != n) return std::nullopt;
    rec.min_edges = rec.representative.edge_count();
    std::string member_g6;
    while (ls >> member_g6) rec.members.push_back(canonical_form(from_graph6(member_g6)));
    rec.lc_size = static_cast<int>(rec.members.size());
    if (rec.lc_size != lc) return std::nullopt;
    if (!std::is_sorted(rec.members.begin(), rec.members.end())) return std::nullopt;
    if (!std::binary_search(rec.members.begin(), rec.members.end(),
                            canonical_form(rec.representative)))
      return std::nullopt;
    orbits.push_back(std::move(rec));
  }
  if (orbits.size() != expected) return std::nullopt;
  return orbits;
}

void store_orbit_cache(const std::filesystem::path& dir, int n, std::span<const OrbitRecord> orbits) {
  std::filesystem::create_directories(dir);
  std::ofstream out(orbit_cache_path(dir, n), std::ios::trunc);
  out << cache_header(n, orbits.size()) << '\n';
  for (const OrbitRecord& rec : orbits) {
    out << to_graph6(rec.representative) << ' ' << rec.lc_size;
    for (const CanonicalForm& f : rec.members) out << ' ' << to_graph6(to_graph(f));
    out << '\n';
  }
}

}  // namespace gsatlas
