#include <doctest.h>

#include <stdexcept>

#include "qmaze/path.hpp"

using namespace qmaze;

TEST_CASE("direction codes follow the two-bit kets") {
  CHECK(code(Direction::N) == 0b00);
  CHECK(code(Direction::E) == 0b01);
  CHECK(code(Direction::S) == 0b10);
  CHECK(code(Direction::W) == 0b11);
  for (std::uint8_t c = 0; c < 4; ++c) CHECK(code(direction_from_code(c)) == c);
  CHECK(opposite(Direction::N) == Direction::S);
  CHECK(opposite(Direction::E) == Direction::W);
  CHECK_THROWS_AS(direction_from_char('x'), std::invalid_argument);
}

TEST_CASE("path_length is twice the Manhattan distance") {
  CHECK(path_length({0, 0}, {2, 2}) == 8);
  CHECK(path_length({0, 0}, {0, 3}) == 6);
  CHECK(path_length({1, 1}, {1, 1}) == 0);
  // Any orientation is legal.
  CHECK(path_length({2, 2}, {0, 0}) == 8);
  CHECK(path_length({3, 0}, {0, 2}) == 10);

  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          const RoomCoord s{a, b}, e{c, d};
          CHECK(path_length(s, e) == path_length(e, s));
          CHECK((path_length(s, e) == 0) == (s == e));
        }
}

TEST_CASE("index encoding puts the first step in the high bits") {
  CHECK(index_from_path({Direction::N, Direction::N}, 2) == 0);
  CHECK(index_from_path({Direction::E, Direction::W}, 2) == 0b0111);
  CHECK(index_from_path({}, 0) == 0);
  CHECK(path_to_string(path_from_index(7, 2)) == "EW");
  // Lexicographic order N < E < S < W.
  CHECK(index_from_path(path_from_string("NW"), 2) < index_from_path(path_from_string("EN"), 2));
}

TEST_CASE("index and path are mutual inverses for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    const PathIndex count = basis_size(n);
    for (PathIndex idx = 0; idx < count; ++idx) {
      const Path p = path_from_index(idx, n);
      REQUIRE(p.size() == static_cast<std::size_t>(n));
      REQUIRE(index_from_path(p, n) == idx);
      for (int k = 0; k < n; ++k) REQUIRE(step_of(idx, n, k) == p[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("encoding rejects bad input") {
  CHECK_THROWS_AS(index_from_path({Direction::N}, 2), std::invalid_argument);
  CHECK_THROWS_AS(path_from_index(16, 2), std::out_of_range);
  CHECK_THROWS_AS(basis_size(-1), std::out_of_range);
  CHECK_THROWS_AS(basis_size(kMaxRepresentableLength + 1), std::out_of_range);
  CHECK_THROWS_AS(path_from_string("NEX"), std::invalid_argument);
  CHECK(path_to_string(path_from_string("EENNSW")) == "EENNSW");
}
