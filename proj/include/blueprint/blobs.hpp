#pragma once

// Red room-marker blobs.

#include <blueprint/components.hpp>

#include <vector>

namespace blueprint {

// Components smaller than this are stray pixels, not room markers.
inline constexpr std::int64_t kRedNoiseFloor = 25;

struct RedBlob {
  Point center;  // rounded centroid
  std::int64_t area = 0;
  Point first;
};

/// Every 8-connected red component, in row-major order of first pixel.
inline std::vector<RedBlob> find_red_blobs(const PixelGrid& grid) {
  auto red = label_components(grid, [](ColorClass c) { return c == ColorClass::Red; }, Connectivity::Eight);
  std::vector<RedBlob> out;
  out.reserve(red.components.size());
  for (const Component& c : red.components) out.push_back({c.centroid(), c.area, c.first});
  return out;
}

/// Centers of red blobs at or above the noise floor, ordered row-major by center.
inline std::vector<Point> detect_red_blobs(const PixelGrid& grid) {
  std::vector<Point> centers;
  for (const RedBlob& b : find_red_blobs(grid))
    if (b.area >= kRedNoiseFloor) centers.push_back(b.center);
  std::sort(centers.begin(), centers.end());
  return centers;
}

}  // namespace blueprint
