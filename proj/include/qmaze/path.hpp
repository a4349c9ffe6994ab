#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmaze {

/// Door/step direction. The underlying value is the 2-bit basis code.
enum class Direction : std::uint8_t { N = 0b00, E = 0b01, S = 0b10, W = 0b11 };

inline constexpr Direction kAllDirections[4] = {Direction::N, Direction::E,
                                                Direction::S, Direction::W};

constexpr std::uint8_t code(Direction d) { return static_cast<std::uint8_t>(d); }
constexpr Direction direction_from_code(std::uint8_t c) {
  return static_cast<Direction>(c & 0b11);
}
constexpr Direction opposite(Direction d) {
  return direction_from_code(static_cast<std::uint8_t>(code(d) ^ 0b10));
}

char to_char(Direction d);
/// Throws std::invalid_argument for anything outside {N,E,S,W}.
Direction direction_from_char(char c);

struct RoomCoord {
  int row = 0;
  int col = 0;
  friend bool operator==(const RoomCoord&, const RoomCoord&) = default;
};

/// Neighbor in direction d. Row 0 is the top row; no bounds check.
constexpr RoomCoord step(RoomCoord r, Direction d) {
  switch (d) {
    case Direction::N: return {r.row - 1, r.col};
    case Direction::E: return {r.row, r.col + 1};
    case Direction::S: return {r.row + 1, r.col};
    case Direction::W: return {r.row, r.col - 1};
  }
  return r;
}

/// Integer label of a basis state, in [0, 4^n).
using PathIndex = std::uint64_t;

/// An individual: a fixed-length sequence of directions.
using Path = std::vector<Direction>;

/// Largest n for which 4^n still fits in PathIndex.
inline constexpr int kMaxRepresentableLength = 31;

/// 4^n. Throws std::out_of_range if n is negative or too large to represent.
PathIndex basis_size(int n);

/// Individual length 2 * (|di| + |dj|) between two rooms.
int path_length(RoomCoord start, RoomCoord end);

/// First step occupies the most significant bit pair.
PathIndex index_from_path(const Path& path, int n);
Path path_from_index(PathIndex index, int n);

/// Direction of step k (0-based) within an n-step index, without decoding the
/// whole path.
constexpr Direction step_of(PathIndex index, int n, int k) {
  return direction_from_code(static_cast<std::uint8_t>(index >> (2 * (n - 1 - k))));
}

std::string path_to_string(const Path& path);
Path path_from_string(std::string_view text);

}  // namespace qmaze
