#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qmaze/path.hpp"

namespace qmaze {

/// Open doors of one room: bit 0 = N, bit 1 = E, bit 2 = S, bit 3 = W.
struct DoorMask {
  std::uint8_t bits = 0;

  constexpr bool is_open(Direction d) const { return (bits >> code(d)) & 1U; }
  constexpr void set(Direction d, bool open) {
    const auto bit = static_cast<std::uint8_t>(1U << code(d));
    bits = open ? static_cast<std::uint8_t>(bits | bit)
                : static_cast<std::uint8_t>(bits & ~bit);
  }
  friend bool operator==(const DoorMask&, const DoorMask&) = default;
};

/// A door opened by the generator, in the order it was opened.
struct DoorEvent {
  RoomCoord from;
  Direction dir;
};

/// Square grid of rooms. Immutable once built; modified copies come from
/// with_door().
class Maze {
 public:
  /// Takes ownership of row-major masks. Only the shape is checked here;
  /// use validate_perfect() for the structural invariants.
  Maze(int size, std::uint64_t seed, std::vector<DoorMask> rooms);

  int size() const { return size_; }
  std::uint64_t seed() const { return seed_; }

  bool contains(RoomCoord r) const {
    return r.row >= 0 && r.row < size_ && r.col >= 0 && r.col < size_;
  }

  /// Throws std::out_of_range for a room outside the grid.
  DoorMask mask(RoomCoord r) const;

  /// False when the door is closed or dir points off the grid.
  bool is_open(RoomCoord r, Direction dir) const;

  /// Number of open interior walls, counting each shared door once.
  std::size_t open_door_count() const;

  /// Copy with the door between r and its neighbor set on both sides. If the
  /// neighbor is off the grid only r's own bit changes.
  Maze with_door(RoomCoord r, Direction dir, bool open) const;

  const std::vector<DoorMask>& rooms() const { return rooms_; }

  friend bool operator==(const Maze&, const Maze&) = default;

 private:
  std::size_t offset(RoomCoord r) const {
    return static_cast<std::size_t>(r.row) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(r.col);
  }

  int size_;
  std::uint64_t seed_;
  std::vector<DoorMask> rooms_;
};

/// Recursive backtracker with an explicit stack. Deterministic in (m, seed).
/// When log is non-null every opened door is appended to it.
Maze generate_maze(int m, std::uint64_t seed, std::vector<DoorEvent>* log = nullptr);

/// Boundary doors closed, door symmetry, connectivity and exactly m^2 - 1 doors.
bool validate_perfect(const Maze& maze);

/// Text format: "m seed" line, then m lines of m lowercase hex masks.
std::string serialize(const Maze& maze);

/// Rejects malformed text, open boundary doors and asymmetric doors with
/// std::invalid_argument. Does not require the maze to be perfect.
Maze deserialize(std::string_view text);

Maze load_maze(const std::string& file);
void save_maze(const Maze& maze, const std::string& file);

}  // namespace qmaze
