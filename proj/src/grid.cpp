#include "asknav/grid.hpp"

#include <algorithm>
#include <deque>

namespace asknav {

GridMap make_arena(int width, int height, double cell_size_m) {
  GridMap g;
  g.width = width;
  g.height = height;
  g.cell_size_m = cell_size_m;
  g.occupied.assign(static_cast<size_t>(width) * height, 0);
  for (int x = 0; x < width; ++x) {
    g.set_occupied({x, 0}, true);
    g.set_occupied({x, height - 1}, true);
  }
  for (int y = 0; y < height; ++y) {
    g.set_occupied({0, y}, true);
    g.set_occupied({width - 1, y}, true);
  }
  return g;
}

namespace {

constexpr Cell kNeighborSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Exact fraction a/b with b > 0, for parametric clip comparisons.
struct Frac {
  long long num;
  long long den;
};

bool frac_leq(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }

// Clips one slab [lo, hi] against p + t*d, updating [tmin, tmax].
// Returns false when the segment misses the slab entirely.
bool clip_axis(long long p, long long d, long long lo, long long hi, Frac& tmin, Frac& tmax) {
  if (d == 0) return p >= lo && p <= hi;
  Frac t0{lo - p, d}, t1{hi - p, d};
  if (d < 0) {
    t0 = {p - lo, -d};
    t1 = {p - hi, -d};
  }
  if (frac_leq(t1, t0)) std::swap(t0, t1);
  if (frac_leq(tmin, t0)) tmin = t0;
  if (frac_leq(t1, tmax)) tmax = t1;
  return frac_leq(tmin, tmax);
}

// Closed-box intersection test between the segment from p0 (doubled
// coordinates) along d and the cell square [2cx, 2cx+2] x [2cy, 2cy+2].
bool segment_touches_cell(long long px, long long py, long long dx, long long dy, Cell c) {
  Frac tmin{0, 1}, tmax{1, 1};
  if (!clip_axis(px, dx, 2LL * c.x, 2LL * c.x + 2, tmin, tmax)) return false;
  if (!clip_axis(py, dy, 2LL * c.y, 2LL * c.y + 2, tmin, tmax)) return false;
  return true;
}

}  // namespace

std::vector<Cell> supercover_between(Cell a, Cell b) {
  std::vector<Cell> cells;
  if (a == b) return cells;
  // Doubled coordinates put cell centers on odd integers, so the whole
  // traversal is exact integer arithmetic.
  long long px = 2LL * a.x + 1, py = 2LL * a.y + 1;
  long long dx = 2LL * (b.x - a.x), dy = 2LL * (b.y - a.y);
  int x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
  int y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      Cell c{x, y};
      if (c == a || c == b) continue;
      if (segment_touches_cell(px, py, dx, dy, c)) cells.push_back(c);
    }
  }
  return cells;
}

bool line_of_sight(const GridMap& grid, Cell a, Cell b) {
  if (a == b) return true;
  long long px = 2LL * a.x + 1, py = 2LL * a.y + 1;
  long long dx = 2LL * (b.x - a.x), dy = 2LL * (b.y - a.y);
  int x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
  int y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      Cell c{x, y};
      if (c == a || c == b) continue;
      if (!grid.is_occupied(c)) continue;
      if (segment_touches_cell(px, py, dx, dy, c)) return false;
    }
  }
  return true;
}

std::vector<int> distance_field(const GridMap& grid, const std::vector<Cell>& goal_region) {
  std::vector<int> dist(static_cast<size_t>(grid.cell_count()), kUnreachable);
  std::deque<Cell> frontier;
  for (Cell g : goal_region) {
    if (!grid.is_free(g)) continue;
    if (dist[grid.index(g)] == 0) continue;
    dist[grid.index(g)] = 0;
    frontier.push_back(g);
  }
  while (!frontier.empty()) {
    Cell c = frontier.front();
    frontier.pop_front();
    int d = dist[grid.index(c)];
    for (Cell step : kNeighborSteps) {
      Cell n{c.x + step.x, c.y + step.y};
      if (!grid.is_free(n)) continue;
      if (dist[grid.index(n)] != kUnreachable) continue;
      dist[grid.index(n)] = d + 1;
      frontier.push_back(n);
    }
  }
  return dist;
}

int geodesic_distance(const GridMap& grid, Cell start, const std::vector<Cell>& goal_region) {
  std::vector<int> dist = distance_field(grid, goal_region);
  return dist[grid.index(start)];
}

bool is_connected(const GridMap& grid) {
  Cell first{-1, -1};
  int free_total = 0;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      if (!grid.is_occupied({x, y})) {
        ++free_total;
        if (first.x < 0) first = {x, y};
      }
    }
  }
  if (free_total == 0) return false;
  std::vector<int> dist = distance_field(grid, {first});
  int reached = 0;
  for (int v : dist) {
    if (v != kUnreachable) ++reached;
  }
  return reached == free_total;
}

}  // namespace asknav
