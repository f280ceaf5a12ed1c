#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "z2norm/checked.hpp"
#include "z2norm/oracle.hpp"

namespace z2norm::verify {

/// Sizes of every oracle sweep. `full()` is the release gate; `quick()` is a
/// smoke run of the same checks.
struct Config {
  std::uint64_t seed = 0x5eed2026ULL;

  Int grid_bound = 25;
  Int grid_bfs_bound = 50;
  double grid_time_limit_seconds = 300.0;

  Int parity_max_p = 1000;
  std::size_t parity_q_per_p = 10;

  Int lens_max_p = 200;

  std::size_t orbit_matrices = 1000;
  std::size_t orbit_max_word = 12;
  std::size_t orbit_alt_vertices = 5;
  Int orbit_vertex_bound = 60;

  Int nil_max_n = 48;

  std::size_t semi_matrices = 500;
  std::size_t semi_max_word = 12;

  Int conj_entry_bound = 20;
  Int conj_search_bound = 30;
  std::size_t conj_negatives = 500;

  std::size_t geodesic_pairs = 500;
  Int geodesic_bound = 40;

  std::size_t invariance_pairs = 500;
  std::size_t invariance_conjugator_word = 8;
  std::size_t slope_tuples = 1000;
  Int slope_tuple_bound = 40;

  static Config full() { return {}; }
  static Config quick();
};

struct Result {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds = 0.0;
};

Result oracle_equivalence(const Config& cfg, Execution exec);
Result bredon_wood_parity(const Config& cfg);
Result lens_invariance(const Config& cfg);
Result closed_vs_orbit(const Config& cfg);
Result periodic_table(const Config& cfg);
Result nil_family(const Config& cfg);
Result semibundle_theorems(const Config& cfg);
Result conjugacy_criterion(const Config& cfg, Execution exec);
Result geodesic_soundness(const Config& cfg);
Result invariance_suite(const Config& cfg);

/// Runs all ten checks in order, printing one PASS/FAIL line each to `log`.
std::vector<Result> run_all(const Config& cfg, Execution exec, std::ostream& log);

std::string format(const Result& r);

}  // namespace z2norm::verify
