#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qmaze/maze.hpp"

using namespace qmaze;

TEST_CASE("single room maze") {
  const Maze maze = generate_maze(1, 12345);
  CHECK(maze.size() == 1);
  CHECK(maze.mask({0, 0}).bits == 0);
  CHECK(maze.open_door_count() == 0);
  CHECK(validate_perfect(maze));
  for (Direction d : kAllDirections) CHECK_FALSE(maze.is_open({0, 0}, d));
  CHECK(serialize(maze) == "1 12345\n0\n");
}

TEST_CASE("generate_maze rejects m = 0") {
  CHECK_THROWS_AS(generate_maze(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_maze(-3, 1), std::invalid_argument);
}

TEST_CASE("16x16 maze is a spanning tree") {
  const Maze maze = generate_maze(16, 7);
  CHECK(maze.rooms().size() == 256);
  CHECK(maze.open_door_count() == 255);
  CHECK(validate_perfect(maze));
}

TEST_CASE("2x2 seed 42 checked by union-find and the door log") {
  std::vector<DoorEvent> log;
  const Maze maze = generate_maze(2, 42, &log);
  const auto doors = oracle::doors_from_log(2, log);
  CHECK(log.size() == 3);
  CHECK(oracle::is_spanning_tree(2, doors));
  CHECK(oracle::doors_from_masks(maze) == doors);

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int dr[4] = {-1, 0, 1, 0};
      const int dc[4] = {0, 1, 0, -1};
      for (Direction d : kAllDirections) {
        const int r2 = i + dr[code(d)], c2 = j + dc[code(d)];
        const bool expected = r2 >= 0 && r2 < 2 && c2 >= 0 && c2 < 2 &&
                              doors.count(oracle::make_edge(i * 2 + j, r2 * 2 + c2)) > 0;
        CHECK(maze.is_open({i, j}, d) == expected);
      }
    }
  }
}

TEST_CASE("generated mazes are perfect and reproducible") {
  for (int m = 1; m <= 64; ++m) {
    const int seeds = m <= 16 ? 100 : 5;
    for (int s = 0; s < seeds; ++s) {
      std::vector<DoorEvent> log;
      const Maze maze = generate_maze(m, static_cast<std::uint64_t>(s) * 7919 + 1, &log);
      REQUIRE(validate_perfect(maze));
      REQUIRE(maze.open_door_count() == static_cast<std::size_t>(m * m - 1));
      REQUIRE(log.size() == static_cast<std::size_t>(m * m - 1));
      if (m <= 16) REQUIRE(oracle::is_spanning_tree(m, oracle::doors_from_masks(maze)));
    }
    CHECK(generate_maze(m, 99) == generate_maze(m, 99));
  }
}

TEST_CASE("door symmetry") {
  const Maze maze = generate_maze(9, 3);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (j + 1 < 9) CHECK(maze.is_open({i, j}, Direction::E) == maze.is_open({i, j + 1}, Direction::W));
      if (i + 1 < 9) CHECK(maze.is_open({i, j}, Direction::S) == maze.is_open({i + 1, j}, Direction::N));
    }
  }
  CHECK_FALSE(maze.is_open({0, 0}, Direction::N));
  CHECK_FALSE(maze.is_open({8, 8}, Direction::E));
}

TEST_CASE("validate_perfect catches broken mazes") {
  const Maze maze = generate_maze(6, 21);
  REQUIRE(validate_perfect(maze));

  // Extra door: find a closed interior wall and open it.
  bool tested_extra = false;
  bool tested_removed = false;
  for (int i = 0; i < 6 && !(tested_extra && tested_removed); ++i) {
    for (int j = 0; j + 1 < 6; ++j) {
      if (!maze.is_open({i, j}, Direction::E) && !tested_extra) {
        CHECK_FALSE(validate_perfect(maze.with_door({i, j}, Direction::E, true)));
        tested_extra = true;
      }
      if (maze.is_open({i, j}, Direction::E) && !tested_removed) {
        CHECK_FALSE(validate_perfect(maze.with_door({i, j}, Direction::E, false)));
        tested_removed = true;
      }
    }
  }
  CHECK(tested_extra);
  CHECK(tested_removed);

  // One-sided door and open boundary.
  std::vector<DoorMask> rooms = maze.rooms();
  rooms[0].set(Direction::N, true);
  CHECK_FALSE(validate_perfect(Maze(6, 21, rooms)));
}

TEST_CASE("serialize round trip") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Maze maze = generate_maze(static_cast<int>(1 + s % 12), s * 31 + 5);
    REQUIRE(deserialize(serialize(maze)) == maze);
  }
  const Maze m3 = generate_maze(3, 11);
  const std::string text = serialize(m3);
  CHECK(text.substr(0, 5) == "3 11\n");
}

TEST_CASE("deserialize rejects malformed input") {
  // 2x2 with room (0,0) E open but (0,1) W closed.
  CHECK_THROWS_AS(deserialize("2 0\n24\n44\n"), std::invalid_argument);
  // Consistent 2x2 (a tree): (0,0)-E-(0,1), (0,0)-S-(1,0).
  CHECK_NOTHROW(deserialize("2 0\n68\n10\n"));
  CHECK_THROWS_AS(deserialize(""), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2\n00\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2 0\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2 0\n000\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2 0\n0g\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2 0\n0F\n00\n"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("2 0\n00\n00\nextra\n"), std::invalid_argument);
  // Boundary door open.
  CHECK_THROWS_AS(deserialize("1 0\n1\n"), std::invalid_argument);
}
