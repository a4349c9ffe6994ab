// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and thresholds are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmaze/fitness.hpp"
#include "qmaze/maze.hpp"
#include "qmaze/search.hpp"
#include "qmaze/statevector.hpp"
#include "qmaze/verify.hpp"

using namespace qmaze;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

FitnessTable synthetic_table(int n, std::uint64_t marked) {
  const PathIndex size = basis_size(n);
  std::vector<FitnessValue> values(size, 0);
  const PathIndex stride = size / marked;
  for (std::uint64_t k = 0; k < marked; ++k) values[k * stride] = 1;
  return FitnessTable(n, 2, 0, {0, 0}, {1, 1}, std::move(values));
}

// 1. 1000 mazes, m in {2..32}: perfect, in under 5 s.
Outcome maze_invariants() {
  const auto t0 = Clock::now();
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const int m = 2 + k % 31;
    std::vector<DoorEvent> log;
    const Maze maze = generate_maze(m, static_cast<std::uint64_t>(k), &log);
    const bool ok = validate_perfect(maze) &&
                    maze.open_door_count() == static_cast<std::size_t>(m * m - 1) &&
                    oracle::is_spanning_tree(m, oracle::doors_from_masks(maze));
    failures += ok ? 0 : 1;
  }
  const double elapsed = seconds_since(t0);
  return {failures == 0 && elapsed < 5.0,
          std::to_string(failures) + " failures, " + std::to_string(elapsed) + " s (limit 5 s)"};
}

// 2. Norm within 1e-12 over 10^4 random oracle/diffusion applications at n = 6.
Outcome normalization() {
  const Maze maze = generate_maze(4, 7);
  const FitnessTable table = build_fitness_table(maze, {0, 0}, {3, 3}, 6);
  StateVector state = uniform_superposition(6);
  Rng rng(2);
  double worst = 0.0;
  for (int op = 0; op < 10000; ++op) {
    if (rng.uniform_below(2) == 0) {
      state.apply_oracle({table, static_cast<FitnessValue>(rng.uniform_below(table.d_max() + 1))});
    } else {
      state.apply_diffusion();
    }
    worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |norm^2 - 1| = %.3e (limit 1e-12)", worst);
  return {worst <= 1e-12, buf};
}

// 3. Marked probability vs sin^2((2r+1) asin(sqrt(l/N))) within 1e-9.
Outcome grover_closed_form() {
  double worst = 0.0;
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t big_n = basis_size(n);
    std::set<std::uint64_t> counts{1, 2, 5, big_n / 4};
    for (std::uint64_t l : counts) {
      if (l < 1 || l > big_n) continue;
      const FitnessTable table = synthetic_table(n, l);
      const OracleSpec oracle{table, 0};
      const int r_max = 2 * static_cast<int>(std::floor(std::numbers::pi / 4.0 *
                                                        std::sqrt(static_cast<double>(big_n) / l)));
      StateVector state = uniform_superposition(n);
      for (int r = 0; r <= r_max; ++r) {
        if (r > 0) state.grover_iterate(oracle, 1);
        const double expected = oracle::grover_marked_probability(static_cast<double>(big_n),
                                                                  static_cast<double>(l), r);
        worst = std::max(worst, std::abs(state.marked_probability(oracle) - expected));
        ++cases;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d (N,l,r) cases, max error %.3e (limit 1e-9)", cases, worst);
  return {worst <= 1e-9, buf};
}

// 4. Sign-flipped set equals the scanned set for 50 random cutoffs.
Outcome oracle_correctness() {
  const Maze maze = generate_maze(4, 7);
  const FitnessTable table = build_fitness_table(maze, {0, 0}, {3, 3}, 6);
  Rng rng(4);
  int mismatches = 0;
  for (int k = 0; k < 50; ++k) {
    const auto cutoff = static_cast<FitnessValue>(rng.uniform_below(table.d_max() + 1));
    StateVector state = uniform_superposition(6);
    const StateVector before = state;
    state.apply_oracle({table, cutoff});
    for (PathIndex idx = 0; idx < table.size(); ++idx) {
      const bool flipped = state[idx] == -before[idx];
      const bool kept = state[idx] == before[idx];
      const bool should_flip = table.values()[idx] > cutoff;
      if (!(should_flip ? flipped : kept)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatched amplitudes over 50 cutoffs"};
}

// 5. 3x3 maze (seed 11), (0,0) -> (2,2), n = 8, known count, 100 seeds.
Outcome end_to_end() {
  const auto t0 = Clock::now();
  const Maze maze = generate_maze(3, 11);
  const FitnessTable table = build_fitness_table(maze, {0, 0}, {2, 2}, 8);
  const FitnessValue truth = exhaustive_max(table).fitness;
  int found = 0;
  bool monotone = true;
  double calls = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SearchConfig config;
    config.mode = IterationMode::KnownCount;
    config.rng_seed = seed;
    const SearchResult r = search_max(table, config);
    found += r.best_fitness == truth ? 1 : 0;
    calls += static_cast<double>(r.oracle_calls_total);
    FitnessValue last = r.initial_cutoff;
    for (const auto& rec : r.history) {
      if (!rec.accepted) continue;
      if (rec.measured_fitness <= last) monotone = false;
      last = rec.measured_fitness;
    }
  }
  const double mean_calls = calls / 100.0;
  const double bound = 10.0 * std::sqrt(static_cast<double>(table.size()));
  const double elapsed = seconds_since(t0);
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "found max in %d/100 (need 90), monotone=%s, mean oracle calls %.1f (limit %.0f), "
                "%.2f s (limit 10 s)",
                found, monotone ? "yes" : "no", mean_calls, bound, elapsed);
  return {found >= 90 && monotone && mean_calls <= bound && elapsed < 10.0, buf};
}

// 6. optimal=true implies best_fitness is the exhaustive maximum, 500 runs.
Outcome certificate_soundness() {
  Rng rng(6);
  int optimal_runs = 0;
  int unsound = 0;
  for (int k = 0; k < 500; ++k) {
    const int m = 2 + static_cast<int>(rng.uniform_below(4));
    const Maze maze = generate_maze(m, rng.next_u64());
    auto room = [&] {
      return RoomCoord{static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m))),
                       static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m)))};
    };
    const RoomCoord start = room();
    const RoomCoord end = room();
    const int n = static_cast<int>(rng.uniform_below(7));
    SearchConfig config;
    config.mode = rng.uniform_below(2) == 0 ? IterationMode::KnownCount : IterationMode::UnknownCount;
    config.rng_seed = rng.next_u64();
    config.max_rounds = 1 + static_cast<int>(rng.uniform_below(10));
    const FitnessTable table = build_fitness_table(maze, start, end, n);
    const SearchResult r = search_max(table, config);
    if (r.optimal) {
      ++optimal_runs;
      if (r.best_fitness != exhaustive_max(table).fitness) ++unsound;
    }
  }
  return {unsound == 0 && optimal_runs > 0,
          std::to_string(optimal_runs) + " certified runs of 500, " + std::to_string(unsound) +
              " unsound"};
}

// 7. Padded BFS path attains D_max on 200 applicable mazes with m <= 5.
Outcome bfs_consistency() {
  Rng rng(7);
  int applicable = 0;
  int failures = 0;
  int attempts = 0;
  while (applicable < 200 && attempts < 10000) {
    ++attempts;
    const int m = 2 + static_cast<int>(rng.uniform_below(4));
    const std::uint64_t seed = rng.next_u64();
    const Maze maze = generate_maze(m, seed);
    const RoomCoord start{static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m))),
                          static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m)))};
    const RoomCoord end{static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m))),
                        static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m)))};
    const int n = std::min(path_length(start, end), 8);
    if (bfs_shortest_path(maze, start, end).distance > n) continue;
    const FitnessTable table = build_fitness_table(maze, start, end, n);
    const ConsistencyReport rep = bfs_consistency_check(maze, start, end, n, table);
    ++applicable;
    if (!rep.applicable || !rep.passed) ++failures;
  }
  return {applicable == 200 && failures == 0,
          std::to_string(applicable) + " applicable mazes, " + std::to_string(failures) + " failures"};
}

// 8. Uniform n = 2 sampled 40000 times passes chi-square at 0.001.
Outcome measurement_statistics() {
  const StateVector state = uniform_superposition(2);
  Rng rng(8);
  std::vector<double> observed(16, 0.0);
  const std::vector<double> expected(16, 40000.0 / 16.0);
  for (int k = 0; k < 40000; ++k) observed[state.measure(rng)] += 1.0;
  const double p = oracle::chi_square_p_value(observed, expected);
  char buf[96];
  std::snprintf(buf, sizeof buf, "p-value %.4f (need > 0.001)", p);
  return {p > 0.001, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 maze invariants", maze_invariants},
      {"2 normalization", normalization},
      {"3 grover closed form", grover_closed_form},
      {"4 oracle correctness", oracle_correctness},
      {"5 end-to-end search", end_to_end},
      {"6 certificate soundness", certificate_soundness},
      {"7 bfs consistency", bfs_consistency},
      {"8 measurement statistics", measurement_statistics},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome o = check();
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
