#include "qmaze/fitness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "binary_io.hpp"

namespace qmaze {

FitnessValue max_fitness_for(int m) {
  const auto side = static_cast<FitnessValue>(m - 1);
  return 2 * side * side;
}

int fitness_width(int m) { return std::bit_width(max_fitness_for(m)); }

namespace {

template <typename StepAt>
WalkResult walk_steps(const Maze& maze, RoomCoord start, RoomCoord end, int n, StepAt step_at) {
  WalkResult result{start, 0, start == end};
  RoomCoord current = start;
  for (int k = 0; k < n && !result.reached_end; ++k) {
    const Direction d = step_at(k);
    if (!maze.is_open(current, d)) break;
    current = step(current, d);
    result.final_room = current;
    result.steps_taken = k + 1;
    result.reached_end = current == end;
  }
  return result;
}

void check_rooms(const Maze& maze, RoomCoord start, RoomCoord end) {
  if (!maze.contains(start)) throw std::out_of_range("start room outside maze");
  if (!maze.contains(end)) throw std::out_of_range("end room outside maze");
}

}  // namespace

WalkResult walk(const Maze& maze, RoomCoord start, RoomCoord end, const Path& path) {
  check_rooms(maze, start, end);
  return walk_steps(maze, start, end, static_cast<int>(path.size()),
                    [&](int k) { return path[static_cast<std::size_t>(k)]; });
}

WalkResult walk_index(const Maze& maze, RoomCoord start, RoomCoord end, PathIndex index, int n) {
  check_rooms(maze, start, end);
  return walk_steps(maze, start, end, n, [=](int k) { return step_of(index, n, k); });
}

FitnessValue fitness_of(const WalkResult& result, RoomCoord end, int m) {
  const auto di = static_cast<long long>(end.row - result.final_room.row);
  const auto dj = static_cast<long long>(end.col - result.final_room.col);
  return max_fitness_for(m) - static_cast<FitnessValue>(di * di + dj * dj);
}

FitnessTable::FitnessTable(int n, int maze_size, std::uint64_t maze_seed, RoomCoord start,
                           RoomCoord end, std::vector<FitnessValue> values)
    : n_(n),
      maze_size_(maze_size),
      maze_seed_(maze_seed),
      start_(start),
      end_(end),
      values_(std::move(values)) {
  if (values_.size() != basis_size(n)) {
    throw std::invalid_argument("fitness table size does not match 4^n");
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_fitness_ = *lo;
  max_fitness_ = *hi;
  if (max_fitness_ > d_max()) throw std::invalid_argument("fitness value above D_max");
}

FitnessTable build_fitness_table(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                                 int length_cap) {
  if (n < 0) throw std::invalid_argument("path length must be non-negative");
  if (n > length_cap || n > kMaxRepresentableLength) {
    throw std::length_error("path length " + std::to_string(n) + " exceeds cap " +
                            std::to_string(length_cap));
  }
  check_rooms(maze, start, end);

  const auto count = static_cast<std::int64_t>(basis_size(n));
  const int m = maze.size();
  std::vector<FitnessValue> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const WalkResult w = walk_index(maze, start, end, static_cast<PathIndex>(idx), n);
    values[static_cast<std::size_t>(idx)] = fitness_of(w, end, m);
  }
  return FitnessTable(n, m, maze.seed(), start, end, std::move(values));
}

namespace {
constexpr std::array<char, 4> kTableMagic{'Q', 'M', 'F', 'T'};
constexpr std::uint32_t kTableVersion = 1;
}  // namespace

void write_fitness_table(std::ostream& out, const FitnessTable& table) {
  out.write(kTableMagic.data(), kTableMagic.size());
  detail::put_le<std::uint32_t>(out, kTableVersion);
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.n()));
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.maze_size()));
  detail::put_le<std::uint64_t>(out, table.maze_seed());
  detail::put_le<std::int32_t>(out, table.start().row);
  detail::put_le<std::int32_t>(out, table.start().col);
  detail::put_le<std::int32_t>(out, table.end().row);
  detail::put_le<std::int32_t>(out, table.end().col);
  detail::put_le<std::uint32_t>(out, table.d_max());
  for (FitnessValue v : table.values()) detail::put_le<std::uint32_t>(out, v);
  if (!out) throw std::ios_base::failure("fitness table write failed");
}

FitnessTable read_fitness_table(std::istream& in, int length_cap) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kTableMagic) throw std::invalid_argument("not a fitness table file");
  if (detail::get_le<std::uint32_t>(in) != kTableVersion) {
    throw std::invalid_argument("unsupported fitness table version");
  }
  const auto n = static_cast<int>(detail::get_le<std::uint32_t>(in));
  const auto m = static_cast<int>(detail::get_le<std::uint32_t>(in));
  const auto seed = detail::get_le<std::uint64_t>(in);
  RoomCoord start{detail::get_le<std::int32_t>(in), detail::get_le<std::int32_t>(in)};
  RoomCoord end{detail::get_le<std::int32_t>(in), detail::get_le<std::int32_t>(in)};
  const auto d_max = detail::get_le<std::uint32_t>(in);
  if (n < 0 || n > length_cap) throw std::length_error("fitness table n exceeds cap");
  if (m < 1 || d_max != max_fitness_for(m)) throw std::invalid_argument("fitness table header inconsistent");

  std::vector<FitnessValue> values(basis_size(n));
  for (auto& v : values) v = detail::get_le<std::uint32_t>(in);
  return FitnessTable(n, m, seed, start, end, std::move(values));
}

}  // namespace qmaze
