#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmaze/maze.hpp"

namespace qmaze::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kCheckFailed = 3 };

/// Runs the command line (args excludes the program name). Normal output goes
/// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ASCII drawing of the maze; rooms listed in `marked` get a '*'.
std::string render_maze(const Maze& maze, const std::vector<RoomCoord>& marked = {});

}  // namespace qmaze::cli
