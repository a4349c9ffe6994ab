#include "qmaze/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace qmaze {

BfsResult bfs_shortest_path(const Maze& maze, RoomCoord start, RoomCoord end) {
  if (!maze.contains(start) || !maze.contains(end)) throw std::out_of_range("room outside maze");
  const auto m = static_cast<std::size_t>(maze.size());
  auto at = [m](RoomCoord r) {
    return static_cast<std::size_t>(r.row) * m + static_cast<std::size_t>(r.col);
  };

  constexpr int kUnseen = -1;
  std::vector<int> came_from(m * m, kUnseen);  // direction code used to enter
  std::vector<bool> seen(m * m, false);
  std::deque<RoomCoord> queue{start};
  seen[at(start)] = true;
  while (!queue.empty() && !seen[at(end)]) {
    const RoomCoord r = queue.front();
    queue.pop_front();
    for (Direction d : kAllDirections) {
      if (!maze.is_open(r, d)) continue;
      const RoomCoord next = step(r, d);
      if (seen[at(next)]) continue;
      seen[at(next)] = true;
      came_from[at(next)] = code(d);
      queue.push_back(next);
    }
  }
  if (!seen[at(end)]) throw std::runtime_error("end room unreachable from start");

  BfsResult result;
  for (RoomCoord r = end; !(r == start);) {
    const Direction d = direction_from_code(static_cast<std::uint8_t>(came_from[at(r)]));
    result.path.push_back(d);
    r = step(r, opposite(d));
  }
  std::reverse(result.path.begin(), result.path.end());
  result.distance = static_cast<int>(result.path.size());
  result.rooms.push_back(start);
  for (Direction d : result.path) result.rooms.push_back(step(result.rooms.back(), d));
  return result;
}

MaxEntry exhaustive_max(const FitnessTable& table) {
  MaxEntry best{0, table[0]};
  for (PathIndex idx = 1; idx < table.size(); ++idx) {
    if (table[idx] > best.fitness) best = {idx, table[idx]};
  }
  return best;
}

ConsistencyReport bfs_consistency_check(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                                        const FitnessTable& table) {
  ConsistencyReport report;
  if (table.n() != n || !(table.start() == start) || !(table.end() == end) ||
      table.maze_size() != maze.size()) {
    report.note = "table was built for different parameters";
    return report;
  }
  const BfsResult bfs = bfs_shortest_path(maze, start, end);
  report.bfs_distance = bfs.distance;
  if (bfs.distance > n) {
    report.passed = true;
    report.note = "not applicable: BFS distance " + std::to_string(bfs.distance) +
                  " exceeds path length " + std::to_string(n);
    return report;
  }
  report.applicable = true;
  Path padded = bfs.path;
  padded.resize(static_cast<std::size_t>(n), Direction::N);
  report.witness = index_from_path(padded, n);
  report.passed = table[report.witness] == table.d_max();
  report.note = report.passed ? "padded BFS path reaches D_max"
                              : "padded BFS path does not reach D_max";
  return report;
}

BenchReport run_benchmark(const FitnessTable& table, const SearchConfig& config, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  BenchReport report;
  report.trials = trials;
  report.basis_size = table.size();
  report.n = table.n();
  report.mode = config.mode;
  report.exhaustive_max = exhaustive_max(table).fitness;
  report.records.reserve(static_cast<std::size_t>(trials));

  double calls = 0.0;
  double rounds = 0.0;
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    SearchConfig trial_config = config;
    trial_config.rng_seed = config.rng_seed + static_cast<std::uint64_t>(t);
    SearchResult result = search_max(table, trial_config);

    TrialRecord rec;
    rec.seed = trial_config.rng_seed;
    rec.best_fitness = result.best_fitness;
    rec.optimal = result.optimal;
    rec.success = result.best_fitness == report.exhaustive_max;
    rec.rounds = static_cast<int>(result.history.size());
    rec.oracle_calls = result.oracle_calls_total;
    report.records.push_back(rec);

    successes += rec.success ? 1 : 0;
    calls += static_cast<double>(rec.oracle_calls);
    rounds += rec.rounds;
    if (t == 0) report.first = std::move(result);
  }
  report.success_rate = static_cast<double>(successes) / trials;
  report.mean_oracle_calls = calls / trials;
  report.mean_rounds = rounds / trials;
  report.sqrt_n_coefficient = report.mean_oracle_calls / std::sqrt(static_cast<double>(table.size()));
  return report;
}

}  // namespace qmaze
