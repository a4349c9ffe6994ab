#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmaze/fitness.hpp"
#include "qmaze/maze.hpp"
#include "qmaze/path.hpp"
#include "qmaze/search.hpp"

namespace qmaze {

struct BfsResult {
  int distance = 0;
  Path path;
  /// Rooms visited from start to end inclusive.
  std::vector<RoomCoord> rooms;
};

/// Shortest open-door route. Throws std::runtime_error if end is unreachable,
/// which cannot happen in a perfect maze.
BfsResult bfs_shortest_path(const Maze& maze, RoomCoord start, RoomCoord end);

struct MaxEntry {
  PathIndex index = 0;
  FitnessValue fitness = 0;
};

/// Maximum-fitness entry; lowest index wins ties.
MaxEntry exhaustive_max(const FitnessTable& table);

struct ConsistencyReport {
  bool passed = false;
  /// False when the BFS distance exceeds n and nothing could be checked.
  bool applicable = false;
  int bfs_distance = 0;
  /// Index of the BFS path padded with N steps, when applicable.
  PathIndex witness = 0;
  std::string note;

  explicit operator bool() const { return passed; }
};

/// When the shortest route fits in n steps, its padded encoding must score D_max.
ConsistencyReport bfs_consistency_check(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                                        const FitnessTable& table);

struct TrialRecord {
  std::uint64_t seed = 0;
  FitnessValue best_fitness = 0;
  bool optimal = false;
  bool success = false;
  int rounds = 0;
  std::uint64_t oracle_calls = 0;
};

struct BenchReport {
  int trials = 0;
  std::uint64_t basis_size = 0;
  int n = 0;
  IterationMode mode = IterationMode::KnownCount;
  FitnessValue exhaustive_max = 0;
  double success_rate = 0.0;
  double mean_oracle_calls = 0.0;
  double mean_rounds = 0.0;
  /// mean_oracle_calls / sqrt(N).
  double sqrt_n_coefficient = 0.0;
  std::vector<TrialRecord> records;
  /// Full result of the first trial, for single-trial echoes.
  SearchResult first;
};

/// Runs `trials` searches with seeds config.rng_seed, config.rng_seed + 1, ...
/// against one shared table.
BenchReport run_benchmark(const FitnessTable& table, const SearchConfig& config, int trials);

}  // namespace qmaze
