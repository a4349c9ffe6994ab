#include "qmaze/path.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qmaze {

char to_char(Direction d) {
  static constexpr char kChars[4] = {'N', 'E', 'S', 'W'};
  return kChars[code(d)];
}

Direction direction_from_char(char c) {
  switch (c) {
    case 'N': return Direction::N;
    case 'E': return Direction::E;
    case 'S': return Direction::S;
    case 'W': return Direction::W;
    default:
      throw std::invalid_argument(std::string("invalid direction character '") + c + "'");
  }
}

PathIndex basis_size(int n) {
  if (n < 0 || n > kMaxRepresentableLength) {
    throw std::out_of_range("path length " + std::to_string(n) +
                            " outside representable range");
  }
  return PathIndex{1} << (2 * n);
}

int path_length(RoomCoord start, RoomCoord end) {
  return 2 * (std::abs(end.row - start.row) + std::abs(end.col - start.col));
}

PathIndex index_from_path(const Path& path, int n) {
  if (static_cast<int>(path.size()) != n) {
    throw std::invalid_argument("path has " + std::to_string(path.size()) +
                                " steps, expected " + std::to_string(n));
  }
  basis_size(n);
  PathIndex index = 0;
  for (Direction d : path) index = (index << 2) | code(d);
  return index;
}

Path path_from_index(PathIndex index, int n) {
  if (index >= basis_size(n)) {
    throw std::out_of_range("path index " + std::to_string(index) +
                            " out of range for n=" + std::to_string(n));
  }
  Path path(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) path[static_cast<std::size_t>(k)] = step_of(index, n, k);
  return path;
}

std::string path_to_string(const Path& path) {
  std::string out;
  out.reserve(path.size());
  for (Direction d : path) out.push_back(to_char(d));
  return out;
}

Path path_from_string(std::string_view text) {
  Path path;
  path.reserve(text.size());
  for (char c : text) path.push_back(direction_from_char(c));
  return path;
}

}  // namespace qmaze
