#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmaze/fitness.hpp"
#include "qmaze/maze.hpp"
#include "qmaze/rng.hpp"
#include "qmaze/statevector.hpp"

namespace qmaze {

/// How many Grover applications a round uses.
///  - KnownCount reads the marked count from the table (simulator privilege).
///  - UnknownCount draws from a growing window and needs no count.
enum class IterationMode { KnownCount, UnknownCount };

const char* to_string(IterationMode mode);
/// Accepts "known", "known_count", "unknown", "unknown_count".
IterationMode iteration_mode_from_string(const std::string& text);

struct SearchConfig {
  /// Round budget; defaults to the fitness bit width (at least 1).
  std::optional<int> max_rounds;
  IterationMode mode = IterationMode::KnownCount;
  std::uint64_t rng_seed = 0;
  /// Upper bound on Grover applications in a single round.
  int grover_cap = 1 << 20;
  /// Stop as soon as no index lies above the cutoff. Disable to spend the
  /// whole round budget regardless.
  bool stop_on_certificate = true;
  int length_cap = kDefaultLengthCap;
};

struct IterationRecord {
  int round = 0;
  FitnessValue cutoff_before = 0;
  std::uint64_t marked = 0;
  int grover_r = 0;
  /// Marked probability of the amplified state just before measurement.
  double success_probability = 0.0;
  PathIndex measured_index = 0;
  FitnessValue measured_fitness = 0;
  bool accepted = false;
};

struct SearchResult {
  int n = 0;
  std::uint64_t basis_size = 0;
  IterationMode mode = IterationMode::KnownCount;
  int max_rounds = 0;
  PathIndex initial_index = 0;
  FitnessValue initial_cutoff = 0;
  PathIndex best_index = 0;
  FitnessValue best_fitness = 0;
  std::vector<IterationRecord> history;
  std::uint64_t oracle_calls_total = 0;
  /// Set when the cutoff provably equals the table maximum.
  bool optimal = false;
};

/// Measures the uniform register once: fitness of a uniformly drawn index.
/// The drawn index is written to sampled_index when non-null.
FitnessValue initial_cutoff(const FitnessTable& table, Rng& rng,
                            PathIndex* sampled_index = nullptr);

/// floor(pi/4 * sqrt(N/l)), at least 1. Throws for l == 0 or l > N.
int known_count_iterations(std::uint64_t basis_size, std::uint64_t marked);

/// Window for the unknown-count mode. Each round draws an iteration count
/// uniformly from the integers below the window; the window starts at 1 and
/// grows by 6/5 after every failed round, saturating at sqrt(N).
class UnknownCountSchedule {
 public:
  explicit UnknownCountSchedule(std::uint64_t basis_size);

  double window() const { return window_; }
  int draw(Rng& rng, int cap) const;
  void on_failure();
  void reset() { window_ = 1.0; }

 private:
  double window_ = 1.0;
  double ceiling_;
};

inline constexpr double kScheduleGrowth = 6.0 / 5.0;

/// Iteration count for one round under either mode, clamped to cap.
int choose_iterations(std::uint64_t basis_size, std::uint64_t marked, IterationMode mode,
                      Rng& rng, int cap, const UnknownCountSchedule& schedule);

/// Iterative threshold search for the maximum-fitness index of a prebuilt
/// table.
SearchResult search_max(const FitnessTable& table, const SearchConfig& config);

/// Builds the table for (maze, start, end, n) and searches it.
SearchResult search_max(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                        const SearchConfig& config);

}  // namespace qmaze
