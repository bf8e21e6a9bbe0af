#include "gsatlas/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "gsatlas/parallel.hpp"

namespace gsatlas {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

std::vector<CanonicalForm> next_level(const std::vector<CanonicalForm>& prev, int n, int jobs) {
  std::mutex merge_mutex;
  FormSet merged;
  size_t chunks = std::min<size_t>(prev.size(), std::max(1, jobs * 4));
  parallel_for(chunks, jobs, [&](size_t chunk) {
    FormSet local;
    size_t begin = prev.size() * chunk / chunks;
    size_t end = prev.size() * (chunk + 1) / chunks;
    for (size_t idx = begin; idx < end; ++idx) {
      Graph base = to_graph(prev[idx]);
      for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        Graph g(n);
        for (auto [i, j] : base.edges()) g.add_edge(i, j);
        for (uint32_t m = mask; m;) {
          int i = std::countr_zero(m);
          m &= m - 1;
          g.add_edge(i, n - 1);
        }
        local.insert(canonical_form(g));
      }
    }
    std::scoped_lock lock(merge_mutex);
    merged.merge(local);
  });
  std::vector<CanonicalForm> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CanonicalForm> enumerate_connected_forms(int n, int jobs) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_connected: n out of supported range [1,10]");
  std::vector<CanonicalForm> level = {canonical_form(Graph(1))};
  for (int k = 2; k <= n; ++k) level = next_level(level, k, jobs);
  return level;
}

std::vector<Graph> enumerate_connected(int n, int jobs) {
  std::vector<CanonicalForm> forms = enumerate_connected_forms(n, jobs);
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(to_graph(f));
  return out;
}

}  // namespace gsatlas
