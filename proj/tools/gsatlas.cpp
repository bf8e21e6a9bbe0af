// gsatlas: enumerate, classify and verify the entanglement atlas of
// connected qubit graph states (n <= 8).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "gsatlas/classify.hpp"
#include "gsatlas/enumerate.hpp"
#include "gsatlas/errors.hpp"
#include "gsatlas/graph6.hpp"
#include "gsatlas/oracle.hpp"
#include "gsatlas/orbit_cache.hpp"
#include "gsatlas/parallel.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconsistency = 3;

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("GSATLAS_CACHE")) return std::filesystem::path(env);
  return std::nullopt;
}

// Writes through a file when requested, else to stdout.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return exit_ok;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return exit_usage;
  }
  emit(out);
  return exit_ok;
}

gsatlas::Graph read_graph_argument(const std::string& arg) {
  std::string text = arg;
  if (text.empty() || text == "-") {
    if (!std::getline(std::cin, text))
      throw std::invalid_argument("no graph6 input on stdin");
  }
  return gsatlas::from_graph6(text);
}

struct VerifyStats {
  int checks = 0;
  int failures = 0;

  void record(const std::string& name, bool ok) {
    ++checks;
    if (!ok) {
      ++failures;
      std::cout << "FAIL " << name << "\n";
    }
  }
};

int run_verify(int n, int jobs, bool inject_corruption) {
  using namespace gsatlas;
  VerifyStats stats;

  if (inject_corruption) {
    // Negative control: feed a sign-flipped K2 generator through the
    // stabilizer check; it must be rejected and the run must exit nonzero.
    Graph k2 = complete_graph(2);
    PauliString corrupted = PauliString::from_letters("XZ", 2);  // -g_0
    StateVector psi = build_state(k2);
    StateVector out = corrupted.apply(psi);
    bool accepted = true;
    for (size_t i = 0; i < psi.amp.size(); ++i)
      if (std::abs(out.amp[i] - psi.amp[i]) > stabilizer_tolerance) accepted = false;
    stats.record("stabilizer(corrupted generator)", accepted);
    std::cout << "verify: " << (stats.checks - stats.failures) << "/" << stats.checks
              << " oracle checks passed\n";
    return stats.failures > 0 ? exit_verification_failure : exit_ok;
  }

  int exhaustive = std::min(n, 6);
  for (int k = 2; k <= exhaustive; ++k) {
    std::vector<Graph> graphs = enumerate_connected(k, jobs);
    bool stab = true, lc = true, ranks = true, rules = true;
    for (const Graph& g : graphs) {
      if (!check_stabilizer(g)) stab = false;
      for (int v = 0; v < k; ++v)
        if (!check_lc_stabilizer_map(g, v)) lc = false;
      for (const Bipartition& bp : all_bipartitions(k))
        if (oracle_schmidt_rank(g, bp) != schmidt_rank(g, bp)) ranks = false;
      if (k <= 5) {
        for (int v = 0; v < k; ++v)
          for (PauliBasis b : {PauliBasis::X, PauliBasis::Y, PauliBasis::Z})
            if (!check_measurement_rule(g, v, b)) rules = false;
      }
    }
    stats.record("stabilizer n=" + std::to_string(k), stab);
    stats.record("lc-map n=" + std::to_string(k), lc);
    stats.record("gf2-vs-svd n=" + std::to_string(k), ranks);
    if (k <= 5) stats.record("measurement-rules n=" + std::to_string(k), rules);
  }

  std::mt19937 rng(20090212);  // fixed seed: identical runs, identical output
  for (int k = 7; k <= n; ++k) {
    bool stab = true, lc = true;
    for (int trial = 0; trial < 100; ++trial) {
      Graph g;
      do {
        g = Graph(k);
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (rng() & 1u) g.add_edge(i, j);
      } while (!is_connected(g));
      if (!check_stabilizer(g)) stab = false;
      if (!check_lc_stabilizer_map(g, static_cast<int>(rng() % k))) lc = false;
    }
    stats.record("stabilizer random n=" + std::to_string(k), stab);
    stats.record("lc-map random n=" + std::to_string(k), lc);
  }

  std::cout << "verify: " << (stats.checks - stats.failures) << "/" << stats.checks
            << " oracle checks passed\n";
  return stats.failures == 0 ? exit_ok : exit_verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state entanglement atlas"};
  app.require_subcommand(1);

  int n = 8;
  int jobs = gsatlas::default_jobs();
  std::string cache_flag;
  std::string format = "csv";
  std::string output;
  bool no_propagation = false;
  bool inject_corruption = false;
  std::string graph_arg;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("-n,--qubits", n, "vertex/qubit count");
    cmd->add_option("-j,--jobs", jobs, "worker threads");
    cmd->add_option("--cache-dir", cache_flag, "orbit cache directory (or env GSATLAS_CACHE)");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
    if (with_format) cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--no-propagation", no_propagation, "skip the edge/vertex-rule bound propagation");
  };

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "connected graphs up to isomorphism, graph6 per line");
  add_common(cmd_enumerate, false);

  CLI::App* cmd_orbits = app.add_subcommand("orbits", "LC orbit partition, orbit-cache text format");
  add_common(cmd_orbits, false);

  CLI::App* cmd_classify = app.add_subcommand("classify", "full classification (csv table or json atlas)");
  add_common(cmd_classify, true);

  CLI::App* cmd_table = app.add_subcommand("table", "aligned human-readable classification table");
  add_common(cmd_table, false);

  CLI::App* cmd_lookup = app.add_subcommand("lookup", "class number of a graph6 graph (argument or stdin)");
  cmd_lookup->add_option("graph6", graph_arg, "graph6 record, or - for stdin");
  add_common(cmd_lookup, false);

  CLI::App* cmd_verify = app.add_subcommand("verify", "statevector oracle suites");
  cmd_verify->add_option("-n,--qubits", n, "largest size to verify (<= 12)");
  cmd_verify->add_option("-j,--jobs", jobs, "worker threads");
  cmd_verify->add_flag("--inject-corruption", inject_corruption,
                       "negative control: corrupt a rule and expect failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    gsatlas::BuildOptions options;
    options.jobs = jobs;
    options.propagation = !no_propagation;
    options.cache_dir = resolve_cache_dir(cache_flag);

    if (cmd_enumerate->parsed()) {
      std::vector<gsatlas::Graph> graphs = gsatlas::enumerate_connected(n, jobs);
      return with_output(output, [&](std::ostream& os) { gsatlas::write_graph6_lines(os, graphs); });
    }

    if (cmd_orbits->parsed()) {
      std::vector<gsatlas::OrbitRecord> orbits;
      if (options.cache_dir) {
        if (auto cached = gsatlas::load_orbit_cache(*options.cache_dir, n)) orbits = std::move(*cached);
      }
      if (orbits.empty()) {
        orbits = gsatlas::enumerate_orbits(n, jobs);
        if (options.cache_dir) gsatlas::store_orbit_cache(*options.cache_dir, n, orbits);
      }
      return with_output(output, [&](std::ostream& os) {
        os << "gsatlas-orbits v1 canon=" << gsatlas::canonical_algorithm_version << " n=" << n
           << " orbits=" << orbits.size() << "\n";
        for (const gsatlas::OrbitRecord& rec : orbits) {
          os << gsatlas::to_graph6(rec.representative) << ' ' << rec.lc_size;
          for (const gsatlas::CanonicalForm& f : rec.members)
            os << ' ' << gsatlas::to_graph6(gsatlas::to_graph(f));
          os << '\n';
        }
      });
    }

    if (cmd_classify->parsed()) {
      gsatlas::Atlas atlas = gsatlas::build_atlas(n, options);
      return with_output(output, [&](std::ostream& os) {
        if (format == "json") gsatlas::write_atlas_json(os, atlas);
        else gsatlas::write_table_csv(os, atlas.classes());
      });
    }

    if (cmd_table->parsed()) {
      gsatlas::Atlas atlas = gsatlas::build_atlas(n, options);
      return with_output(output, [&](std::ostream& os) {
        os << "  no    |LC|  |E|  E_S   RI_4           RI_3        RI_2     2-col\n";
        for (const gsatlas::ClassRecord& r : atlas.classes()) {
          char line[160];
          auto tup = [&](int p) {
            std::string s;
            if (p <= r.representative.size() / 2) {
              s = "(";
              const std::vector<int>& t = r.rank_indexes.tuple(p);
              for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
              s += ")";
            }
            return s;
          };
          std::snprintf(line, sizeof line, "%4d %6d %4d  %-5s %-14s %-11s %-8s %s",
                        r.number, r.lc_size, r.min_edges,
                        gsatlas::render_schmidt_measure(r.bounds).c_str(), tup(4).c_str(),
                        tup(3).c_str(), tup(2).c_str(), r.two_colorable ? "yes" : "no");
          os << line << '\n';
        }
      });
    }

    if (cmd_lookup->parsed()) {
      gsatlas::Graph g = read_graph_argument(graph_arg);
      gsatlas::Atlas atlas = gsatlas::build_atlas(g.size(), options);
      int number = atlas.lookup(g);
      const gsatlas::ClassRecord* rec = nullptr;
      for (const gsatlas::ClassRecord& r : atlas.classes())
        if (r.number == number) rec = &r;
      std::cout << "class " << number << "  |LC|=" << rec->lc_size << "  |E|=" << rec->min_edges
                << "  E_S=" << gsatlas::render_schmidt_measure(rec->bounds)
                << "  representative=" << gsatlas::to_graph6(rec->representative) << "\n";
      return exit_ok;
    }

    if (cmd_verify->parsed()) {
      if (n < 2 || n > gsatlas::oracle_max_qubits) {
        std::cerr << "error: verify supports 2 <= n <= " << gsatlas::oracle_max_qubits << "\n";
        return exit_usage;
      }
      return run_verify(n, jobs, inject_corruption);
    }
  } catch (const gsatlas::ConsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconsistency;
  }
  return exit_usage;
}
