#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "gsatlas/lc_orbit.hpp"

namespace gsatlas {

// Plain-text orbit cache, one orbit per line: representative graph6, |LC|,
// then the member graph6 list in canonical order. The header pins the
// canonical-labeling algorithm version; a stale or malformed file is treated
// as a miss.
std::filesystem::path orbit_cache_path(const std::filesystem::path& dir, int n);
std::optional<std::vector<OrbitRecord>> load_orbit_cache(const std::filesystem::path& dir, int n);
void store_orbit_cache(const std::filesystem::path& dir, int n, std::span<const OrbitRecord> orbits);

}  // namespace gsatlas
