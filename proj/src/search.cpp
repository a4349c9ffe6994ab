#include "qmaze/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmaze {

const char* to_string(IterationMode mode) {
  return mode == IterationMode::KnownCount ? "known_count" : "unknown_count";
}

IterationMode iteration_mode_from_string(const std::string& text) {
  if (text == "known" || text == "known_count") return IterationMode::KnownCount;
  if (text == "unknown" || text == "unknown_count") return IterationMode::UnknownCount;
  throw std::invalid_argument("unknown iteration mode '" + text + "'");
}

FitnessValue initial_cutoff(const FitnessTable& table, Rng& rng, PathIndex* sampled_index) {
  const PathIndex idx = rng.uniform_below(table.size());
  if (sampled_index != nullptr) *sampled_index = idx;
  return table[idx];
}

int known_count_iterations(std::uint64_t basis_size, std::uint64_t marked) {
  if (marked == 0) throw std::invalid_argument("known-count iterations need at least one marked state");
  if (marked > basis_size) throw std::invalid_argument("marked count exceeds basis size");
  const double ratio = static_cast<double>(basis_size) / static_cast<double>(marked);
  const auto r = static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
  return std::max(r, 1);
}

UnknownCountSchedule::UnknownCountSchedule(std::uint64_t basis_size)
    : ceiling_(std::max(1.0, std::sqrt(static_cast<double>(basis_size)))) {}

int UnknownCountSchedule::draw(Rng& rng, int cap) const {
  const double bound = std::min(window_, static_cast<double>(cap));
  const auto choices = static_cast<std::uint64_t>(std::max(1.0, std::ceil(bound)));
  return static_cast<int>(rng.uniform_below(choices));
}

void UnknownCountSchedule::on_failure() { window_ = std::min(window_ * kScheduleGrowth, ceiling_); }

int choose_iterations(std::uint64_t basis_size, std::uint64_t marked, IterationMode mode,
                      Rng& rng, int cap, const UnknownCountSchedule& schedule) {
  if (cap < 1) throw std::invalid_argument("grover cap must be at least 1");
  if (mode == IterationMode::KnownCount) {
    return std::min(known_count_iterations(basis_size, marked), cap);
  }
  return schedule.draw(rng, cap);
}

SearchResult search_max(const FitnessTable& table, const SearchConfig& config) {
  if (config.max_rounds && *config.max_rounds < 1) {
    throw std::invalid_argument("max_rounds must be at least 1");
  }
  if (config.grover_cap < 1) throw std::invalid_argument("grover cap must be at least 1");

  SearchResult result;
  result.n = table.n();
  result.basis_size = table.size();
  result.mode = config.mode;
  result.max_rounds = config.max_rounds.value_or(std::max(1, fitness_width(table.maze_size())));

  Rng rng(config.rng_seed);
  FitnessValue cutoff = initial_cutoff(table, rng, &result.initial_index);
  result.initial_cutoff = cutoff;
  result.best_index = result.initial_index;
  result.best_fitness = cutoff;

  UnknownCountSchedule schedule(table.size());
  for (int round = 0; round < result.max_rounds; ++round) {
    const std::uint64_t marked = marked_count(table, cutoff);
    if (marked == 0 && config.stop_on_certificate) {
      result.optimal = true;
      break;
    }

    // With the certificate disabled an empty marked set still costs a round;
    // size it as if one state were marked.
    const int r = choose_iterations(table.size(), std::max<std::uint64_t>(marked, 1), config.mode,
                                    rng, config.grover_cap, schedule);

    StateVector state = uniform_superposition(table.n(), config.length_cap);
    const OracleSpec oracle{table, cutoff};
    state.grover_iterate(oracle, r);

    IterationRecord rec;
    rec.round = round;
    rec.cutoff_before = cutoff;
    rec.marked = marked;
    rec.grover_r = r;
    rec.success_probability = state.marked_probability(oracle);
    rec.measured_index = state.measure(rng);
    rec.measured_fitness = table[rec.measured_index];
    rec.accepted = rec.measured_fitness > cutoff;
    result.oracle_calls_total += static_cast<std::uint64_t>(r);

    if (rec.accepted) {
      cutoff = rec.measured_fitness;
      result.best_index = rec.measured_index;
      result.best_fitness = rec.measured_fitness;
      schedule.reset();
    } else {
      schedule.on_failure();
    }
    result.history.push_back(rec);
  }

  // The budget may run out exactly as the maximum is reached; reading the
  // table costs no oracle calls.
  if (!result.optimal && config.stop_on_certificate && marked_count(table, cutoff) == 0) {
    result.optimal = true;
  }
  return result;
}

SearchResult search_max(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                        const SearchConfig& config) {
  const FitnessTable table = build_fitness_table(maze, start, end, n, config.length_cap);
  return search_max(table, config);
}

}  // namespace qmaze
