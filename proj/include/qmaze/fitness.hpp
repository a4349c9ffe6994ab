#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qmaze/maze.hpp"
#include "qmaze/path.hpp"

namespace qmaze {

using FitnessValue = std::uint32_t;

/// Default ceiling on the path length for dense tables and statevectors.
/// 4^14 entries is the largest that fits comfortably in commodity RAM.
inline constexpr int kDefaultLengthCap = 14;

struct WalkResult {
  RoomCoord final_room;
  int steps_taken = 0;
  bool reached_end = false;
  friend bool operator==(const WalkResult&, const WalkResult&) = default;
};

/// Largest squared Euclidean distance on an m x m grid: 2 (m-1)^2.
FitnessValue max_fitness_for(int m);

/// Bits needed to hold any fitness on an m x m grid.
int fitness_width(int m);

/// Follows the path from start, halting at the first closed or off-grid door,
/// on reaching end, or when the steps run out.
WalkResult walk(const Maze& maze, RoomCoord start, RoomCoord end, const Path& path);

/// Same walk, reading the directions straight out of an n-step index.
WalkResult walk_index(const Maze& maze, RoomCoord start, RoomCoord end, PathIndex index, int n);

/// D_max minus the squared Euclidean distance from the final room to end.
FitnessValue fitness_of(const WalkResult& result, RoomCoord end, int m);

/// Fitness of every n-step path, indexed by PathIndex.
class FitnessTable {
 public:
  FitnessTable(int n, int maze_size, std::uint64_t maze_seed, RoomCoord start, RoomCoord end,
               std::vector<FitnessValue> values);

  int n() const { return n_; }
  int maze_size() const { return maze_size_; }
  std::uint64_t maze_seed() const { return maze_seed_; }
  RoomCoord start() const { return start_; }
  RoomCoord end() const { return end_; }
  FitnessValue d_max() const { return max_fitness_for(maze_size_); }
  FitnessValue max_fitness() const { return max_fitness_; }
  FitnessValue min_fitness() const { return min_fitness_; }

  std::size_t size() const { return values_.size(); }
  FitnessValue operator[](PathIndex idx) const { return values_[idx]; }
  const std::vector<FitnessValue>& values() const { return values_; }

 private:
  int n_;
  int maze_size_;
  std::uint64_t maze_seed_;
  RoomCoord start_;
  RoomCoord end_;
  std::vector<FitnessValue> values_;
  FitnessValue max_fitness_ = 0;
  FitnessValue min_fitness_ = 0;
};

/// Evaluates all 4^n paths in parallel. Throws std::length_error when n
/// exceeds length_cap and std::out_of_range for rooms outside the maze.
FitnessTable build_fitness_table(const Maze& maze, RoomCoord start, RoomCoord end, int n,
                                 int length_cap = kDefaultLengthCap);

/// Binary layout, all little-endian:
///   char[4] "QMFT", u32 version (1), u32 n, u32 m, u64 maze seed,
///   i32 start row, i32 start col, i32 end row, i32 end col, u32 D_max,
///   then 4^n u32 fitness values in index order.
void write_fitness_table(std::ostream& out, const FitnessTable& table);
FitnessTable read_fitness_table(std::istream& in, int length_cap = kDefaultLengthCap);

}  // namespace qmaze
