#include "qmaze/maze.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qmaze/rng.hpp"

namespace qmaze {

Maze::Maze(int size, std::uint64_t seed, std::vector<DoorMask> rooms)
    : size_(size), seed_(seed), rooms_(std::move(rooms)) {
  if (size < 1) throw std::invalid_argument("maze size must be at least 1");
  if (rooms_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw std::invalid_argument("maze room count does not match size");
  }
  for (DoorMask d : rooms_) {
    if (d.bits > 0xF) throw std::invalid_argument("door mask out of range");
  }
}

DoorMask Maze::mask(RoomCoord r) const {
  if (!contains(r)) throw std::out_of_range("room outside maze");
  return rooms_[offset(r)];
}

bool Maze::is_open(RoomCoord r, Direction dir) const {
  if (!contains(r) || !contains(step(r, dir))) return false;
  return rooms_[offset(r)].is_open(dir);
}

std::size_t Maze::open_door_count() const {
  std::size_t count = 0;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      // Count each interior wall from its north-west side only.
      if (is_open({i, j}, Direction::E)) ++count;
      if (is_open({i, j}, Direction::S)) ++count;
    }
  }
  return count;
}

Maze Maze::with_door(RoomCoord r, Direction dir, bool open) const {
  if (!contains(r)) throw std::out_of_range("room outside maze");
  Maze copy = *this;
  copy.rooms_[offset(r)].set(dir, open);
  const RoomCoord other = step(r, dir);
  if (contains(other)) copy.rooms_[offset(other)].set(opposite(dir), open);
  return copy;
}

Maze generate_maze(int m, std::uint64_t seed, std::vector<DoorEvent>* log) {
  if (m < 1) throw std::invalid_argument("maze size must be at least 1");

  const auto cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  std::vector<DoorMask> rooms(cells);
  std::vector<bool> visited(cells, false);
  auto at = [m](RoomCoord r) {
    return static_cast<std::size_t>(r.row) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(r.col);
  };
  auto inside = [m](RoomCoord r) { return r.row >= 0 && r.row < m && r.col >= 0 && r.col < m; };

  Rng rng(seed);
  const auto first = rng.uniform_below(cells);
  const RoomCoord start{static_cast<int>(first / static_cast<std::size_t>(m)),
                        static_cast<int>(first % static_cast<std::size_t>(m))};

  std::vector<RoomCoord> stack;
  stack.reserve(cells);
  stack.push_back(start);
  visited[at(start)] = true;

  Direction candidates[4];
  while (!stack.empty()) {
    const RoomCoord current = stack.back();
    int count = 0;
    for (Direction d : kAllDirections) {
      const RoomCoord next = step(current, d);
      if (inside(next) && !visited[at(next)]) candidates[count++] = d;
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const Direction d = candidates[rng.uniform_below(static_cast<std::uint64_t>(count))];
    const RoomCoord next = step(current, d);
    rooms[at(current)].set(d, true);
    rooms[at(next)].set(opposite(d), true);
    visited[at(next)] = true;
    if (log != nullptr) log->push_back({current, d});
    stack.push_back(next);
  }
  return Maze(m, seed, std::move(rooms));
}

namespace {

bool doors_consistent(const Maze& maze) {
  const int m = maze.size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const RoomCoord r{i, j};
      const DoorMask mask = maze.mask(r);
      for (Direction d : kAllDirections) {
        const RoomCoord other = step(r, d);
        if (!maze.contains(other)) {
          if (mask.is_open(d)) return false;
        } else if (mask.is_open(d) != maze.mask(other).is_open(opposite(d))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool validate_perfect(const Maze& maze) {
  if (!doors_consistent(maze)) return false;
  const auto m = static_cast<std::size_t>(maze.size());
  if (maze.open_door_count() != m * m - 1) return false;

  std::vector<bool> seen(m * m, false);
  std::vector<RoomCoord> frontier{{0, 0}};
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const RoomCoord r = frontier.back();
    frontier.pop_back();
    for (Direction d : kAllDirections) {
      if (!maze.is_open(r, d)) continue;
      const RoomCoord next = step(r, d);
      const auto k = static_cast<std::size_t>(next.row) * m + static_cast<std::size_t>(next.col);
      if (!seen[k]) {
        seen[k] = true;
        ++reached;
        frontier.push_back(next);
      }
    }
  }
  return reached == m * m;
}

std::string serialize(const Maze& maze) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(maze.size()) + ' ' + std::to_string(maze.seed()) + '\n';
  for (int i = 0; i < maze.size(); ++i) {
    for (int j = 0; j < maze.size(); ++j) out.push_back(kHex[maze.mask({i, j}).bits]);
    out.push_back('\n');
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

Maze deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("maze text: missing header");

  std::istringstream hs(header);
  long long m = 0;
  std::uint64_t seed = 0;
  std::string trailing;
  if (!(hs >> m >> seed) || (hs >> trailing)) {
    throw std::invalid_argument("maze text: header must be 'size seed'");
  }
  if (m < 1 || m > 4096) throw std::invalid_argument("maze text: size out of range");

  const auto size = static_cast<int>(m);
  std::vector<DoorMask> rooms;
  rooms.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  std::string line;
  for (int i = 0; i < size; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("maze text: missing row " + std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != size) {
      throw std::invalid_argument("maze text: row " + std::to_string(i) + " has wrong width");
    }
    for (char c : line) {
      const int v = hex_value(c);
      if (v < 0) throw std::invalid_argument(std::string("maze text: invalid mask digit '") + c + "'");
      rooms.push_back(DoorMask{static_cast<std::uint8_t>(v)});
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("maze text: trailing content after last row");
    }
  }

  Maze maze(size, seed, std::move(rooms));
  if (!doors_consistent(maze)) {
    throw std::invalid_argument("maze text: boundary door open or doors not symmetric");
  }
  return maze;
}

Maze load_maze(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open maze file '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

void save_maze(const Maze& maze, const std::string& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write maze file '" + file + "'");
  out << serialize(maze);
  if (!out) throw std::ios_base::failure("write failed for '" + file + "'");
}

}  // namespace qmaze
