#pragma once

// Checks a classified raster against the mechanically checkable format
// rules. Findings are advisory: extraction and scoring run regardless.
//
// Checked: 1 (doors sit on walls), 4 (opaque background), 5 (rooms
// enclosed), 6 (one 10x10 red dot per enclosed area), 7 (no path between
// two dots), 8 (palette colors only). Rules 2, 3 and 9 are not checked.

#include <blueprint/blobs.hpp>
#include <blueprint/components.hpp>
#include <blueprint/ir.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace blueprint {

struct ValidatorOptions {
  std::int64_t min_dot_area = 50;
  std::int64_t max_dot_area = 200;
  // Enclosed dot-free regions smaller than this are wall-junction pockets.
  std::int64_t min_room_area = 100;
  // Entries per rule before the rest are folded into one summary entry.
  std::size_t max_per_rule = 16;
};

namespace validator_detail {

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void add(int rule, std::string description, std::optional<Point> location = std::nullopt) {
    std::size_t& n = counts_[rule];
    if (n++ < cap_) out_.push_back({rule, std::move(description), location});
  }

  std::vector<RuleViolation> finish() && {
    for (const auto& [rule, n] : counts_)
      if (n > cap_) out_.push_back({rule, std::to_string(n - cap_) + " further violations of this rule omitted", {}});
    return std::move(out_);
  }

 private:
  std::size_t cap_;
  std::map<int, std::size_t> counts_;
  std::vector<RuleViolation> out_;
};

// Per green component: does any of its pixels have a black 8-neighbour?
inline std::vector<bool> green_on_black(const PixelGrid& grid, const ComponentLabels& green) {
  std::vector<bool> on_black(green.components.size(), false);
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x) {
      const int id = green.at(x, y);
      if (id == kNoLabel || on_black[id]) continue;
      for (int dy = -1; dy <= 1 && !on_black[id]; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (grid.contains(x + dx, y + dy) && grid.at(x + dx, y + dy) == ColorClass::Black) {
            on_black[id] = true;
            break;
          }
    }
  return on_black;
}

}  // namespace validator_detail

inline std::vector<RuleViolation> validate(const PixelGrid& grid, const ValidatorOptions& opt = {}) {
  validator_detail::Collector out(opt.max_per_rule);

  if (grid.translucent()) out.add(4, "image has transparent pixels; background must be opaque white");

  std::int64_t off_palette = 0;
  std::optional<Point> first_off;
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x)
      if (grid.at(x, y) == ColorClass::Other && off_palette++ == 0) first_off = Point{x, y};
  if (off_palette > 0)
    out.add(8, std::to_string(off_palette) + " pixel(s) outside the red/black/white/green palette", first_off);

  const std::vector<RedBlob> blobs = find_red_blobs(grid);
  std::vector<const RedBlob*> dots;
  for (const RedBlob& b : blobs) {
    if (b.area >= kRedNoiseFloor) dots.push_back(&b);
    if (b.area < opt.min_dot_area || b.area > opt.max_dot_area)
      out.add(6, "red blob of " + std::to_string(b.area) + " px is not a 10x10 dot", b.center);
  }
  if (dots.empty()) out.add(6, "no red room dots found");

  const ComponentLabels regions = label_components(grid, is_traversable, Connectivity::Four);
  std::vector<int> dots_in(regions.components.size(), 0);
  for (const RedBlob* b : dots) {
    int id = grid.contains(b->center.x, b->center.y) ? regions.at(b->center.x, b->center.y) : kNoLabel;
    if (id == kNoLabel) id = regions.at(b->first.x, b->first.y);
    ++dots_in[id];
  }
  for (const Component& c : regions.components) {
    const int n = dots_in[c.id];
    if (n >= 2)
      out.add(7, std::to_string(n) + " red dots share one region; rooms are not separated", c.first);
    if (n >= 1 && c.touches_border) out.add(5, "room region reaches the image border; room is not enclosed", c.first);
    if (n == 0 && !c.touches_border && c.area >= opt.min_room_area)
      out.add(6, "enclosed area of " + std::to_string(c.area) + " px has no red dot", c.first);
  }

  const ComponentLabels green =
      label_components(grid, [](ColorClass c) { return c == ColorClass::Green; }, Connectivity::Eight);
  const std::vector<bool> on_black = validator_detail::green_on_black(grid, green);
  for (const Component& c : green.components)
    if (!on_black[c.id])
      out.add(1, "green door pixels are not drawn on a black wall", c.first);

  return std::move(out).finish();
}

inline bool mentions_rule(const std::vector<RuleViolation>& vs, int rule) {
  return std::any_of(vs.begin(), vs.end(), [rule](const RuleViolation& v) { return v.rule == rule; });
}

}  // namespace blueprint
