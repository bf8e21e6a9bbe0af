#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsatlas/classify.hpp"
#include "gsatlas/orbit_cache.hpp"

using namespace gsatlas;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gsatlas-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE_BEGIN("orbit-cache");

TEST_CASE("store and load round trip") {
  TempDir dir;
  std::vector<OrbitRecord> orbits = enumerate_orbits(5);
  store_orbit_cache(dir.path, 5, orbits);
  auto loaded = load_orbit_cache(dir.path, 5);
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->size() == orbits.size());
  for (size_t i = 0; i < orbits.size(); ++i) {
    CHECK((*loaded)[i].members == orbits[i].members);
    CHECK((*loaded)[i].representative == orbits[i].representative);
    CHECK((*loaded)[i].lc_size == orbits[i].lc_size);
    CHECK((*loaded)[i].min_edges == orbits[i].min_edges);
  }
}

TEST_CASE("missing or stale caches are misses") {
  TempDir dir;
  CHECK_FALSE(load_orbit_cache(dir.path, 5).has_value());

  std::vector<OrbitRecord> orbits = enumerate_orbits(4);
  store_orbit_cache(dir.path, 4, orbits);
  // rewrite with a foreign canonical-algorithm version stamp
  std::ifstream in(orbit_cache_path(dir.path, 4));
  std::stringstream body;
  body << in.rdbuf();
  std::string text = body.str();
  text.replace(text.find("canon="), 7, "canon=0");
  std::ofstream(orbit_cache_path(dir.path, 4), std::ios::trunc) << text;
  CHECK_FALSE(load_orbit_cache(dir.path, 4).has_value());
}

TEST_CASE("corrupted member list is a miss") {
  TempDir dir;
  store_orbit_cache(dir.path, 4, enumerate_orbits(4));
  std::ifstream in(orbit_cache_path(dir.path, 4));
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  std::ofstream out(orbit_cache_path(dir.path, 4), std::ios::trunc);
  out << header << "\n" << line << " C~\n";  // extra member breaks the count
  out.close();
  CHECK_FALSE(load_orbit_cache(dir.path, 4).has_value());
}

TEST_CASE("warm cache reproduces the cold-run classification byte for byte") {
  TempDir dir;
  BuildOptions opts;
  opts.cache_dir = dir.path;
  std::ostringstream cold, warm;
  write_table_csv(cold, build_atlas(5, opts).classes());
  CHECK(std::filesystem::exists(orbit_cache_path(dir.path, 5)));
  write_table_csv(warm, build_atlas(5, opts).classes());
  CHECK(cold.str() == warm.str());

  std::ostringstream uncached;
  write_table_csv(uncached, build_atlas(5).classes());
  CHECK(cold.str() == uncached.str());
}

TEST_SUITE_END();
