#pragma once

// Raster -> rooms, doors and connectivity.
//
// Rooms are 4-connected flood fills over non-wall, non-door pixels seeded at
// red dot centers. Doors are 8-connected green components; each door probes
// a few pixels to both sides of its long axis to find the rooms it joins.

#include <blueprint/blobs.hpp>
#include <blueprint/components.hpp>
#include <blueprint/ir.hpp>
#include <blueprint/validator.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace blueprint {

// Walls are 3 px wide, so 4 px crosses any residual wall sliver next to a
// door without reaching past the neighbouring room.
inline constexpr int kDoorProbeDepth = 4;

struct RoomRegion {
  int id = 0;
  std::vector<Point> dots;
  std::int64_t area = 0;
  Point centroid;
  bool touches_border = false;
};

struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<int> labels;  // region id or kNoLabel

  std::optional<int> at(int x, int y) const {
    const int v = labels[static_cast<std::size_t>(y) * width + x];
    return v == kNoLabel ? std::nullopt : std::optional<int>(v);
  }
};

struct Segmentation {
  LabelMap labels;
  std::vector<RoomRegion> regions;
  std::vector<Point> wall_dots;  // seeds that fell on black or green pixels
};

struct DoorRecord {
  int id = 0;
  Point center;
  Orientation orientation = Orientation::Horizontal;
  std::vector<int> regions;  // distinct incident region ids, ascending
  int bbox_width = 0;
  int bbox_height = 0;
};

/// Flood fill from each dot. Dots landing in an already-filled region join
/// that region instead of starting a new one.
inline Segmentation segment_rooms(const PixelGrid& grid, const std::vector<Point>& dots) {
  Segmentation seg;
  seg.labels.width = grid.width();
  seg.labels.height = grid.height();
  seg.labels.labels.assign(grid.size(), kNoLabel);
  std::vector<Point> stack;
  for (const Point& d : dots) {
    if (!grid.contains(d.x, d.y) || !is_traversable(grid.at(d))) {
      seg.wall_dots.push_back(d);
      continue;
    }
    const int existing = seg.labels.labels[grid.index(d.x, d.y)];
    if (existing != kNoLabel) {
      seg.regions[existing].dots.push_back(d);
      continue;
    }
    const int id = static_cast<int>(seg.regions.size());
    const Component c = flood_fill(grid, d, is_traversable, Connectivity::Four, id, seg.labels.labels, stack);
    seg.regions.push_back({id, {d}, c.area, c.centroid(), c.touches_border});
  }
  return seg;
}

inline std::vector<DoorRecord> detect_doors(const PixelGrid& grid, const LabelMap& labels) {
  const ComponentLabels green =
      label_components(grid, [](ColorClass c) { return c == ColorClass::Green; }, Connectivity::Eight);
  std::vector<std::set<int>> incident(green.components.size());
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const int id = green.at(x, y);
      if (id == kNoLabel) continue;
      const Component& c = green.components[id];
      const bool horizontal = c.bbox_width() >= c.bbox_height();
      const int dx = horizontal ? 0 : 1;
      const int dy = horizontal ? 1 : 0;
      for (int side : {-1, 1}) {
        for (int k = 1; k <= kDoorProbeDepth; ++k) {
          const int px = x + side * k * dx;
          const int py = y + side * k * dy;
          if (!grid.contains(px, py)) break;
          if (auto region = labels.at(px, py)) {
            incident[id].insert(*region);
            break;
          }
        }
      }
    }
  }
  std::vector<DoorRecord> doors;
  doors.reserve(green.components.size());
  for (const Component& c : green.components) {
    DoorRecord d;
    d.id = c.id;
    d.center = c.centroid();
    d.orientation = c.bbox_width() >= c.bbox_height() ? Orientation::Horizontal : Orientation::Vertical;
    d.regions.assign(incident[c.id].begin(), incident[c.id].end());
    d.bbox_width = c.bbox_width();
    d.bbox_height = c.bbox_height();
    doors.push_back(std::move(d));
  }
  return doors;
}

struct Extraction {
  FloorPlanIR ir;
  Segmentation segmentation;
  std::vector<DoorRecord> doors;
  std::vector<int> rank_of_region;
};

/// Full extraction keeping the intermediate products (label map, raw doors).
inline Extraction extract_detailed(const PixelGrid& grid, const ValidatorOptions& opt = {}) {
  Extraction out;
  out.segmentation = segment_rooms(grid, detect_red_blobs(grid));
  out.doors = detect_doors(grid, out.segmentation.labels);
  const auto& regions = out.segmentation.regions;
  out.rank_of_region = rank_rooms(regions);

  FloorPlanIR& ir = out.ir;
  for (const RoomRegion& r : regions) ir.rooms.push_back({out.rank_of_region[r.id], r.area, r.centroid});
  for (const DoorRecord& d : out.doors) {
    DoorEntry e{d.center, d.orientation, {}};
    for (int region : d.regions) e.rooms.push_back(out.rank_of_region[region]);
    ir.doors.push_back(std::move(e));
  }
  ir = canonical(std::move(ir));
  ir.edges = edges_from_doors(ir.doors);
  ir.violations = validate(grid, opt);
  for (const Point& p : out.segmentation.wall_dots)
    ir.violations.push_back({6, "red dot center lies on a wall or door pixel", p});
  return out;
}

inline FloorPlanIR extract(const PixelGrid& grid, const ValidatorOptions& opt = {}) {
  return std::move(extract_detailed(grid, opt).ir);
}

}  // namespace blueprint
