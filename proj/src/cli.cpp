#include "qmaze/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmaze/fitness.hpp"
#include "qmaze/report.hpp"
#include "qmaze/search.hpp"
#include "qmaze/verify.hpp"

namespace qmaze::cli {

namespace {

// Thrown for failures that map to a specific exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

struct Options {
  std::string input;
  std::string output;
  int size = 0;
  std::uint64_t seed = 0;
  std::string start;
  std::string end;
  std::optional<int> length;
  int length_cap = kDefaultLengthCap;
  std::string mode = "known";
  std::optional<int> rounds;
  std::uint64_t rng_seed = 0;
  int grover_cap = 1 << 20;
  bool no_certificate = false;
  int trials = 100;
  std::string format = "text";
  std::string save_table;
  std::string load_table;
  std::string overlay_path;
  bool overlay_bfs = false;
};

RoomCoord parse_room(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int row = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int col = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {row, col};
  } catch (const std::exception&) {
    throw CommandError(kUsage, "room must be given as ROW,COL (got '" + text + "')");
  }
}

std::string room_str(RoomCoord r) {
  return "(" + std::to_string(r.row) + "," + std::to_string(r.col) + ")";
}

Maze obtain_maze(const Options& opt, int invalid_code) {
  if (!opt.input.empty()) {
    std::ifstream probe(opt.input);
    if (!probe) throw CommandError(kIo, "cannot open maze file '" + opt.input + "'");
    try {
      return load_maze(opt.input);
    } catch (const std::invalid_argument& e) {
      throw CommandError(invalid_code, opt.input + ": " + e.what());
    }
  }
  if (opt.size < 1) throw CommandError(kUsage, "either --input or a positive --size is required");
  return generate_maze(opt.size, opt.seed);
}

struct Endpoints {
  RoomCoord start;
  RoomCoord end;
  int n;
};

Endpoints resolve_endpoints(const Options& opt, const Maze& maze) {
  Endpoints ep{{0, 0}, {maze.size() - 1, maze.size() - 1}, 0};
  if (!opt.start.empty()) ep.start = parse_room(opt.start);
  if (!opt.end.empty()) ep.end = parse_room(opt.end);
  if (!maze.contains(ep.start)) throw CommandError(kUsage, "start room " + room_str(ep.start) + " outside maze");
  if (!maze.contains(ep.end)) throw CommandError(kUsage, "end room " + room_str(ep.end) + " outside maze");
  ep.n = opt.length.value_or(path_length(ep.start, ep.end));
  if (ep.n < 0) throw CommandError(kUsage, "path length must be non-negative");
  if (ep.n > opt.length_cap) {
    throw CommandError(kUsage, "path length " + std::to_string(ep.n) + " exceeds the cap of " +
                                   std::to_string(opt.length_cap) +
                                   " (4^n amplitudes); pass --length-cap to raise it");
  }
  return ep;
}

SearchConfig search_config(const Options& opt) {
  SearchConfig config;
  try {
    config.mode = iteration_mode_from_string(opt.mode);
  } catch (const std::invalid_argument& e) {
    throw CommandError(kUsage, e.what());
  }
  config.max_rounds = opt.rounds;
  config.rng_seed = opt.rng_seed;
  config.grover_cap = opt.grover_cap;
  config.stop_on_certificate = !opt.no_certificate;
  config.length_cap = opt.length_cap;
  return config;
}

FitnessTable obtain_table(const Options& opt, const Maze& maze, const Endpoints& ep) {
  if (!opt.load_table.empty()) {
    std::ifstream in(opt.load_table, std::ios::binary);
    if (!in) throw CommandError(kIo, "cannot open table file '" + opt.load_table + "'");
    FitnessTable table = [&] {
      try {
        return read_fitness_table(in, opt.length_cap);
      } catch (const std::exception& e) {
        throw CommandError(kIo, opt.load_table + ": " + e.what());
      }
    }();
    if (table.n() != ep.n || !(table.start() == ep.start) || !(table.end() == ep.end) ||
        table.maze_size() != maze.size() || table.maze_seed() != maze.seed()) {
      throw CommandError(kUsage, "table file '" + opt.load_table + "' was built for different parameters");
    }
    return table;
  }
  FitnessTable table = build_fitness_table(maze, ep.start, ep.end, ep.n, opt.length_cap);
  if (!opt.save_table.empty()) {
    std::ofstream out(opt.save_table, std::ios::binary);
    if (!out) throw CommandError(kIo, "cannot write table file '" + opt.save_table + "'");
    write_fitness_table(out, table);
  }
  return table;
}

bool json_output(const Options& opt) {
  if (opt.format == "json") return true;
  if (opt.format == "text") return false;
  throw CommandError(kUsage, "--format must be text or json");
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const Maze maze = generate_maze(opt.size, opt.seed);
  if (opt.output.empty()) {
    out << serialize(maze);
  } else {
    try {
      save_maze(maze, opt.output);
    } catch (const std::ios_base::failure& e) {
      throw CommandError(kIo, e.what());
    }
  }
  (opt.output.empty() ? err : out) << "generated " << maze.size() << "x" << maze.size()
                                   << " maze, seed " << maze.seed() << ", "
                                   << maze.open_door_count() << " open doors\n";
  return kOk;
}

int cmd_solve(const Options& opt, std::ostream& out) {
  const bool as_json = json_output(opt);
  const Maze maze = obtain_maze(opt, kIo);
  const Endpoints ep = resolve_endpoints(opt, maze);
  const SearchConfig config = search_config(opt);
  const FitnessTable table = obtain_table(opt, maze, ep);
  const SearchResult result = search_max(table, config);

  const Path best = path_from_index(result.best_index, result.n);
  const WalkResult replay = walk(maze, ep.start, ep.end, best);

  if (as_json) {
    nlohmann::json doc = {
        {"config",
         {{"maze_size", maze.size()},
          {"maze_seed", maze.seed()},
          {"start", {ep.start.row, ep.start.col}},
          {"end", {ep.end.row, ep.end.col}},
          {"n", ep.n},
          {"mode", to_string(config.mode)},
          {"rng_seed", config.rng_seed},
          {"stop_on_certificate", config.stop_on_certificate}}},
        {"d_max", table.d_max()},
        {"final_room", {replay.final_room.row, replay.final_room.col}},
        {"reached_end", replay.reached_end},
        {"result", to_json(result)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << "maze " << maze.size() << "x" << maze.size() << " seed " << maze.seed() << ", start "
      << room_str(ep.start) << " end " << room_str(ep.end) << ", n=" << ep.n
      << ", N=" << table.size() << ", mode " << to_string(config.mode) << '\n';
  out << "initial cutoff " << result.initial_cutoff << " (index " << result.initial_index << ")\n";
  for (const auto& rec : result.history) {
    out << "round " << rec.round << ": cutoff " << rec.cutoff_before << ", marked " << rec.marked
        << ", r=" << rec.grover_r << ", p=" << std::fixed << std::setprecision(4)
        << rec.success_probability << std::defaultfloat << ", measured fitness "
        << rec.measured_fitness << (rec.accepted ? " accepted" : " rejected") << '\n';
  }
  out << "best fitness " << result.best_fitness << " of D_max " << table.d_max()
      << (result.optimal ? " (optimal)" : "") << '\n';
  out << "best path " << (best.empty() ? "-" : path_to_string(best)) << '\n';
  out << "final room " << room_str(replay.final_room) << " after " << replay.steps_taken
      << " steps" << (replay.reached_end ? ", end reached" : "") << '\n';
  out << "oracle calls " << result.oracle_calls_total << '\n';
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const bool as_json = json_output(opt);
  const Maze maze = obtain_maze(opt, kCheckFailed);
  const Endpoints ep = resolve_endpoints(opt, maze);

  const bool perfect = validate_perfect(maze);
  bool all_ok = perfect;
  nlohmann::json doc = {{"perfect", perfect}};
  if (!as_json) out << "perfect maze: " << (perfect ? "ok" : "FAIL") << '\n';

  if (perfect) {
    const BfsResult bfs = bfs_shortest_path(maze, ep.start, ep.end);
    const FitnessTable table = obtain_table(opt, maze, ep);
    const MaxEntry best = exhaustive_max(table);
    const ConsistencyReport consistency = bfs_consistency_check(maze, ep.start, ep.end, ep.n, table);
    const bool max_ok = best.fitness == table.max_fitness();
    all_ok = all_ok && consistency.passed && max_ok;

    doc["bfs"] = {{"distance", bfs.distance}, {"path", path_to_string(bfs.path)}};
    doc["exhaustive_max"] = {{"index", best.index}, {"fitness", best.fitness}, {"d_max", table.d_max()}};
    doc["consistency"] = {{"passed", consistency.passed},
                          {"applicable", consistency.applicable},
                          {"note", consistency.note}};
    if (!as_json) {
      out << "bfs distance " << bfs.distance << ", path "
          << (bfs.path.empty() ? "-" : path_to_string(bfs.path)) << '\n';
      out << "exhaustive max fitness " << best.fitness << " at index " << best.index << " (D_max "
          << table.d_max() << "): " << (max_ok ? "ok" : "FAIL") << '\n';
      out << "bfs consistency (n=" << ep.n << "): " << (consistency.passed ? "ok" : "FAIL")
          << " - " << consistency.note << '\n';
    }
  }
  doc["passed"] = all_ok;
  if (as_json) out << doc.dump(2) << '\n';
  return all_ok ? kOk : kCheckFailed;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const bool as_json = json_output(opt);
  if (opt.trials < 1) throw CommandError(kUsage, "--trials must be at least 1");
  const Maze maze = obtain_maze(opt, kIo);
  const Endpoints ep = resolve_endpoints(opt, maze);
  const SearchConfig config = search_config(opt);
  const FitnessTable table = obtain_table(opt, maze, ep);
  const BenchReport report = run_benchmark(table, config, opt.trials);

  if (as_json) {
    nlohmann::json doc = to_json(report);
    if (report.trials == 1) doc["result"] = to_json(report.first);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "trials " << report.trials << ", n=" << report.n << ", N=" << report.basis_size
      << ", mode " << to_string(report.mode) << '\n';
  out << "exhaustive max " << report.exhaustive_max << '\n';
  out << "success rate " << report.success_rate << '\n';
  out << "mean rounds " << report.mean_rounds << '\n';
  out << "mean oracle calls " << report.mean_oracle_calls << " (" << report.sqrt_n_coefficient
      << " * sqrt(N))\n";
  for (const auto& r : report.records) {
    out << "  seed " << r.seed << ": best " << r.best_fitness << (r.optimal ? " optimal" : "")
        << ", rounds " << r.rounds << ", oracle calls " << r.oracle_calls << '\n';
  }
  return kOk;
}

int cmd_render(const Options& opt, std::ostream& out) {
  const Maze maze = obtain_maze(opt, kIo);
  std::vector<RoomCoord> marked;
  if (opt.overlay_bfs || !opt.overlay_path.empty()) {
    RoomCoord start{0, 0};
    RoomCoord end{maze.size() - 1, maze.size() - 1};
    if (!opt.start.empty()) start = parse_room(opt.start);
    if (!opt.end.empty()) end = parse_room(opt.end);
    if (!maze.contains(start) || !maze.contains(end)) throw CommandError(kUsage, "overlay room outside maze");
    if (opt.overlay_bfs) {
      marked = bfs_shortest_path(maze, start, end).rooms;
    } else {
      Path path;
      try {
        path = path_from_string(opt.overlay_path);
      } catch (const std::invalid_argument& e) {
        throw CommandError(kUsage, e.what());
      }
      // Overlay the rooms the walk actually visits.
      marked.push_back(start);
      const WalkResult w = walk(maze, start, end, path);
      for (int k = 0; k < w.steps_taken; ++k) {
        marked.push_back(step(marked.back(), path[static_cast<std::size_t>(k)]));
      }
    }
  }
  out << render_maze(maze, marked);
  return kOk;
}

}  // namespace

std::string render_maze(const Maze& maze, const std::vector<RoomCoord>& marked) {
  const int m = maze.size();
  auto is_marked = [&](RoomCoord r) {
    return std::find(marked.begin(), marked.end(), r) != marked.end();
  };
  std::string text;
  for (int i = 0; i < m; ++i) {
    text += '+';
    for (int j = 0; j < m; ++j) text += maze.is_open({i, j}, Direction::N) ? "   +" : "---+";
    text += '\n';
    text += maze.is_open({i, 0}, Direction::W) ? ' ' : '|';
    for (int j = 0; j < m; ++j) {
      text += is_marked({i, j}) ? " * " : "   ";
      text += maze.is_open({i, j}, Direction::E) ? ' ' : '|';
    }
    text += '\n';
  }
  text += '+';
  for (int j = 0; j < m; ++j) text += maze.is_open({m - 1, j}, Direction::S) ? "   +" : "---+";
  text += '\n';
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maze solving by iterative threshold Grover search on a statevector simulator",
               "qmaze"};
  app.require_subcommand(1);
  Options opt;

  auto add_maze_source = [&opt](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "Maze file to load");
    cmd->add_option("--size", opt.size, "Generate an m x m maze when no input is given")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "Maze generator seed");
  };
  auto add_endpoints = [&opt](CLI::App* cmd) {
    cmd->add_option("--start", opt.start, "Start room ROW,COL (default 0,0)");
    cmd->add_option("--end", opt.end, "End room ROW,COL (default m-1,m-1)");
    cmd->add_option("--length", opt.length, "Path length n (default 2 x Manhattan distance)");
    cmd->add_option("--length-cap", opt.length_cap, "Largest n accepted")
        ->capture_default_str();
    cmd->add_option("--save-table", opt.save_table, "Write the fitness table to FILE");
    cmd->add_option("--load-table", opt.load_table, "Reuse a fitness table from FILE");
  };
  auto add_search = [&opt](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode, "known or unknown marked count")->capture_default_str();
    cmd->add_option("--rounds", opt.rounds, "Round budget (default: fitness bit width)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rng-seed", opt.rng_seed, "Search seed")->capture_default_str();
    cmd->add_option("--grover-cap", opt.grover_cap, "Max Grover iterations per round")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-certificate", opt.no_certificate,
                  "Keep searching after the cutoff reaches the table maximum");
  };
  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text or json")->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a perfect maze");
  gen->add_option("--size", opt.size, "Maze side length m")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--output", opt.output, "Output file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Search for the maximum-fitness path");
  add_maze_source(solve);
  add_endpoints(solve);
  add_search(solve);
  add_format(solve);

  CLI::App* verify = app.add_subcommand("verify", "Run the classical checks on a maze");
  add_maze_source(verify);
  add_endpoints(verify);
  add_format(verify);

  CLI::App* bench = app.add_subcommand("bench", "Repeat the search over many seeds");
  add_maze_source(bench);
  add_endpoints(bench);
  add_search(bench);
  add_format(bench);
  bench->add_option("--trials", opt.trials, "Number of independent runs")->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "Draw the maze as ASCII");
  add_maze_source(render);
  render->add_option("--start", opt.start, "Overlay start room ROW,COL");
  render->add_option("--end", opt.end, "Overlay end room ROW,COL");
  render->add_option("--path", opt.overlay_path, "Overlay the rooms walked by a direction string");
  render->add_flag("--bfs", opt.overlay_bfs, "Overlay the shortest path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (solve->parsed()) return cmd_solve(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (bench->parsed()) return cmd_bench(opt, out);
    if (render->parsed()) return cmd_render(opt, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qmaze::cli
