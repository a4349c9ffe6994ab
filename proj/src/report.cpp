#include "qmaze/report.hpp"

namespace qmaze {

using nlohmann::json;

json to_json(const IterationRecord& rec) {
  return {{"round", rec.round},
          {"cutoff_before", rec.cutoff_before},
          {"marked", rec.marked},
          {"grover_r", rec.grover_r},
          {"success_probability", rec.success_probability},
          {"measured_index", rec.measured_index},
          {"measured_fitness", rec.measured_fitness},
          {"accepted", rec.accepted}};
}

json to_json(const SearchResult& result) {
  json history = json::array();
  for (const auto& rec : result.history) history.push_back(to_json(rec));
  return {{"n", result.n},
          {"basis_size", result.basis_size},
          {"mode", to_string(result.mode)},
          {"max_rounds", result.max_rounds},
          {"initial_index", result.initial_index},
          {"initial_cutoff", result.initial_cutoff},
          {"best_index", result.best_index},
          {"best_path", path_to_string(path_from_index(result.best_index, result.n))},
          {"best_fitness", result.best_fitness},
          {"oracle_calls_total", result.oracle_calls_total},
          {"optimal", result.optimal},
          {"history", std::move(history)}};
}

json to_json(const BenchReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"seed", r.seed},
                       {"best_fitness", r.best_fitness},
                       {"optimal", r.optimal},
                       {"success", r.success},
                       {"rounds", r.rounds},
                       {"oracle_calls", r.oracle_calls}});
  }
  return {{"trials", report.trials},
          {"n", report.n},
          {"basis_size", report.basis_size},
          {"mode", to_string(report.mode)},
          {"exhaustive_max", report.exhaustive_max},
          {"success_rate", report.success_rate},
          {"mean_oracle_calls", report.mean_oracle_calls},
          {"mean_rounds", report.mean_rounds},
          {"sqrt_n_coefficient", report.sqrt_n_coefficient},
          {"records", std::move(records)}};
}

}  // namespace qmaze
