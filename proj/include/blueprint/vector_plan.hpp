#pragma once

// Geometry of the restricted vector format and its rasterizer.

#include <blueprint/raster.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace blueprint {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

enum class ElementKind { Segment, Rect, Dot };

/// One paint operation in canvas pixel coordinates (pixel centers sit at
/// integer coordinates).
///
/// Segment: `a` -> `b`, covering pixels within stroke_width / 2 of the
/// segment, no extension past the endpoints.
/// Rect: corner `a`, size `b`. When `filled`, covers pixel centers in
/// [a, a + size); otherwise paints the four edges as segments extended by
/// half the stroke width so corners close.
/// Dot: center `a`, diameter `size`; a filled square covering pixel centers
/// in [center - size/2, center + size/2).
struct VectorElement {
  ElementKind kind = ElementKind::Segment;
  Vec2 a;
  Vec2 b;
  double size = 0.0;
  ColorClass color = ColorClass::Black;
  double stroke_width = 1.0;
  bool filled = false;

  static VectorElement segment(Vec2 from, Vec2 to, ColorClass color, double width) {
    return {ElementKind::Segment, from, to, 0.0, color, width, false};
  }
  static VectorElement rect(Vec2 corner, Vec2 extent, ColorClass color, bool filled, double width = 1.0) {
    return {ElementKind::Rect, corner, extent, 0.0, color, width, filled};
  }
  static VectorElement dot(Vec2 center, double diameter, ColorClass color) {
    return {ElementKind::Dot, center, {}, diameter, color, diameter, true};
  }

  friend bool operator==(const VectorElement&, const VectorElement&) = default;
};

struct VectorPlan {
  int width = 1000;
  int height = 1000;
  std::vector<VectorElement> elements;  // painter's order

  friend bool operator==(const VectorPlan&, const VectorPlan&) = default;
};

namespace detail {

inline constexpr double kCoverEps = 1e-9;

inline void paint_box(PixelGrid& grid, double x0, double y0, double x1, double y1, ColorClass c) {
  // Pixel centers p with x0 <= p < x1 (half-open), clipped to the grid.
  const int ix0 = std::max(0, static_cast<int>(std::ceil(x0 - kCoverEps)));
  const int iy0 = std::max(0, static_cast<int>(std::ceil(y0 - kCoverEps)));
  const int ix1 = std::min(grid.width() - 1, static_cast<int>(std::ceil(x1 - kCoverEps)) - 1);
  const int iy1 = std::min(grid.height() - 1, static_cast<int>(std::ceil(y1 - kCoverEps)) - 1);
  for (int y = iy0; y <= iy1; ++y)
    for (int x = ix0; x <= ix1; ++x) grid.set(x, y, c);
}

inline void paint_segment(PixelGrid& grid, Vec2 a, Vec2 b, double width, ColorClass c) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (!(len > 0.0) || !(width > 0.0)) return;
  const double ux = dx / len;
  const double uy = dy / len;
  const double half = width / 2.0;
  const double reach = half + 1.0;
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - reach)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - reach)));
  const int x1 = std::min(grid.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + reach)));
  const int y1 = std::min(grid.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + reach)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double px = x - a.x;
      const double py = y - a.y;
      const double along = px * ux + py * uy;
      const double across = -px * uy + py * ux;
      if (along >= -kCoverEps && along <= len + kCoverEps && std::abs(across) <= half + kCoverEps)
        grid.set(x, y, c);
    }
  }
}

inline Vec2 scaled(Vec2 v, double sx, double sy) { return {v.x * sx, v.y * sy}; }

}  // namespace detail

/// Paint `plan` onto a white out_width x out_height grid, without
/// anti-aliasing. Coordinates scale by out / canvas when the sizes differ.
inline PixelGrid rasterize(const VectorPlan& plan, int out_width, int out_height) {
  PixelGrid grid(out_width, out_height, ColorClass::White);
  const double sx = plan.width > 0 ? static_cast<double>(out_width) / plan.width : 1.0;
  const double sy = plan.height > 0 ? static_cast<double>(out_height) / plan.height : 1.0;
  const double sw = std::min(sx, sy);
  for (const VectorElement& e : plan.elements) {
    switch (e.kind) {
      case ElementKind::Segment:
        detail::paint_segment(grid, detail::scaled(e.a, sx, sy), detail::scaled(e.b, sx, sy),
                              e.stroke_width * sw, e.color);
        break;
      case ElementKind::Dot: {
        const Vec2 c = detail::scaled(e.a, sx, sy);
        const double hx = e.size * sx / 2.0;
        const double hy = e.size * sy / 2.0;
        if (e.size > 0.0) detail::paint_box(grid, c.x - hx, c.y - hy, c.x + hx, c.y + hy, e.color);
        break;
      }
      case ElementKind::Rect: {
        const Vec2 p = detail::scaled(e.a, sx, sy);
        const Vec2 s = detail::scaled(e.b, sx, sy);
        if (!(s.x > 0.0) || !(s.y > 0.0)) break;
        if (e.filled) {
          detail::paint_box(grid, p.x, p.y, p.x + s.x, p.y + s.y, e.color);
        } else {
          const double w = e.stroke_width * sw;
          const double h = w / 2.0;
          const Vec2 tl = p, tr{p.x + s.x, p.y}, br{p.x + s.x, p.y + s.y}, bl{p.x, p.y + s.y};
          detail::paint_segment(grid, {tl.x - h, tl.y}, {tr.x + h, tr.y}, w, e.color);
          detail::paint_segment(grid, {tr.x, tr.y - h}, {br.x, br.y + h}, w, e.color);
          detail::paint_segment(grid, {br.x + h, br.y}, {bl.x - h, bl.y}, w, e.color);
          detail::paint_segment(grid, {bl.x, bl.y + h}, {tl.x, tl.y - h}, w, e.color);
        }
        break;
      }
    }
  }
  return grid;
}

inline PixelGrid rasterize(const VectorPlan& plan) { return rasterize(plan, plan.width, plan.height); }

}  // namespace blueprint
