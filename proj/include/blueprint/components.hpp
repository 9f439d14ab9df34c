#pragma once

// Connected-component labeling over a PixelGrid predicate.

#include <blueprint/raster.hpp>

#include <cstdint>
#include <limits>
#include <vector>

namespace blueprint {

enum class Connectivity { Four, Eight };

struct Component {
  int id = 0;
  std::int64_t area = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  int max_x = std::numeric_limits<int>::min();
  int max_y = std::numeric_limits<int>::min();
  bool touches_border = false;
  Point first;  // first pixel in row-major scan order

  int bbox_width() const { return max_x - min_x + 1; }
  int bbox_height() const { return max_y - min_y + 1; }

  // Mean pixel position rounded half up: floor(sum / area + 1/2).
  Point centroid() const {
    auto round_mean = [this](std::int64_t sum) {
      const std::int64_t num = 2 * sum + area;
      const std::int64_t den = 2 * area;
      return static_cast<int>(num >= 0 ? num / den : -((-num + den - 1) / den));
    };
    return {round_mean(sum_x), round_mean(sum_y)};
  }
};

inline constexpr int kNoLabel = -1;

struct ComponentLabels {
  int width = 0;
  int height = 0;
  std::vector<int> labels;  // kNoLabel or index into components
  std::vector<Component> components;

  int at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

namespace detail {

inline void grow(Component& c, int x, int y, int w, int h) {
  ++c.area;
  c.sum_x += x;
  c.sum_y += y;
  c.min_x = std::min(c.min_x, x);
  c.min_y = std::min(c.min_y, y);
  c.max_x = std::max(c.max_x, x);
  c.max_y = std::max(c.max_y, y);
  if (x == 0 || y == 0 || x == w - 1 || y == h - 1) c.touches_border = true;
}

}  // namespace detail

/// Flood one component from `seed` over pixels satisfying `pred`, writing
/// `id` into `labels`. Returns the component statistics. The seed must
/// satisfy the predicate and be unlabeled.
template <typename Pred>
Component flood_fill(const PixelGrid& grid, Point seed, Pred&& pred, Connectivity conn, int id,
                     std::vector<int>& labels, std::vector<Point>& stack) {
  const int w = grid.width();
  const int h = grid.height();
  Component comp;
  comp.id = id;
  comp.first = seed;
  stack.clear();
  stack.push_back(seed);
  labels[grid.index(seed.x, seed.y)] = id;
  static constexpr int dx4[] = {1, -1, 0, 0};
  static constexpr int dy4[] = {0, 0, 1, -1};
  static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int n = conn == Connectivity::Four ? 4 : 8;
  const int* dx = conn == Connectivity::Four ? dx4 : dx8;
  const int* dy = conn == Connectivity::Four ? dy4 : dy8;
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    detail::grow(comp, p.x, p.y, w, h);
    if (p < comp.first) comp.first = p;
    for (int k = 0; k < n; ++k) {
      const int nx = p.x + dx[k];
      const int ny = p.y + dy[k];
      if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
      const std::size_t i = grid.index(nx, ny);
      if (labels[i] != kNoLabel || !pred(grid.at(nx, ny))) continue;
      labels[i] = id;
      stack.push_back({nx, ny});
    }
  }
  return comp;
}

/// Label every component of pixels whose class satisfies `pred`.
/// Component ids follow row-major order of each component's first pixel.
template <typename Pred>
ComponentLabels label_components(const PixelGrid& grid, Pred&& pred, Connectivity conn) {
  ComponentLabels out;
  out.width = grid.width();
  out.height = grid.height();
  out.labels.assign(grid.size(), kNoLabel);
  std::vector<Point> stack;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (out.labels[grid.index(x, y)] != kNoLabel || !pred(grid.at(x, y))) continue;
      const int id = static_cast<int>(out.components.size());
      out.components.push_back(flood_fill(grid, {x, y}, pred, conn, id, out.labels, stack));
    }
  }
  return out;
}

inline bool is_traversable(ColorClass c) { return c != ColorClass::Black && c != ColorClass::Green; }

}  // namespace blueprint
