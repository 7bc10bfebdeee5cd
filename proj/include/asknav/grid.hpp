#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace asknav {

struct Cell {
  int x = 0;  // column, grows east
  int y = 0;  // row, grows south

  bool operator==(const Cell&) const = default;
};

// Occupancy grid. Border cells are always occupied (closed arena) and the
// free-cell subgraph is expected to be 4-connected (enforced by episode
// generation, checkable via is_connected).
struct GridMap {
  int width = 0;
  int height = 0;
  double cell_size_m = 0.25;
  std::vector<uint8_t> occupied;  // row-major, width*height

  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool is_occupied(Cell c) const { return occupied[static_cast<size_t>(c.y) * width + c.x] != 0; }
  bool is_free(Cell c) const { return in_bounds(c) && !is_occupied(c); }
  void set_occupied(Cell c, bool v) {
    occupied[static_cast<size_t>(c.y) * width + c.x] = v ? 1 : 0;
  }
  int cell_count() const { return width * height; }
  int index(Cell c) const { return c.y * width + c.x; }
};

// Empty arena of the given size: occupied border, free interior.
GridMap make_arena(int width, int height, double cell_size_m = 0.25);

// True when every free cell is reachable from every other via 4-neighbors.
bool is_connected(const GridMap& grid);

// Supercover line of sight between cell centers. A cell blocks when it is
// occupied, lies strictly between a and b, and the segment touches its
// closed unit square (corner grazes count). Endpoint occupancy is ignored;
// symmetric in a and b.
bool line_of_sight(const GridMap& grid, Cell a, Cell b);

// All cells strictly between a and b whose closed square the center-to-center
// segment touches. Exposed for visibility oracles in tests.
std::vector<Cell> supercover_between(Cell a, Cell b);

inline constexpr int kUnreachable = -1;

// Shortest 4-connected free-cell path length from start to any goal cell,
// by breadth-first search. Returns kUnreachable when no path exists.
// Goal cells that are occupied are ignored; 0 when start is itself a goal.
int geodesic_distance(const GridMap& grid, Cell start, const std::vector<Cell>& goal_region);

// BFS distance from every free cell to the nearest goal cell.
// field[grid.index(c)] == kUnreachable for occupied or cut-off cells.
std::vector<int> distance_field(const GridMap& grid, const std::vector<Cell>& goal_region);

}  // namespace asknav
