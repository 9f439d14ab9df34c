#pragma once

// Procedural rule-compliant floor plans with analytically known ground truth.
//
// The canvas rectangle is split by binary space partitioning into
// rectilinear rooms. Walls are stored by centerline: a wall on line c of
// width w covers pixels c - (w-1)/2 .. c + (w-1)/2. Doors replace the full
// wall thickness over `door_length` pixels. A uniformly random spanning
// tree of the door-capable adjacency graph receives doors first, so every
// plan is connected; remaining shared walls get a door with
// `extra_door_prob`. The truth record is computed from the rectangles, never
// from pixels, which makes extraction checkable exactly.

#include <blueprint/extractor.hpp>
#include <blueprint/ir.hpp>
#include <blueprint/raster.hpp>
#include <blueprint/scorer.hpp>
#include <blueprint/svg.hpp>
#include <blueprint/vector_plan.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blueprint {

struct SynthConfig {
  int min_rooms = 3;
  int max_rooms = 6;
  int width = 1000;
  int height = 1000;
  int wall_width = 3;
  int door_length = 24;
  int dot_size = 10;
  double extra_door_prob = 0.25;
  double min_area_margin = 0.02;
  std::uint64_t seed = 0;
  int outer_margin = 20;    // white frame around the building
  int min_room_side = 80;   // interior pixels
  int door_clearance = 2;   // pixels kept free at each end of a shared wall
  int max_attempts = 500;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Room in wall-centerline coordinates.
struct RoomRect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  friend bool operator==(const RoomRect&, const RoomRect&) = default;
};

/// Wall between two rooms. `line` is the wall centerline; [lo, hi] is the
/// pixel range along the wall where both sides are room interior.
struct SharedWall {
  int room_a = 0, room_b = 0;  // geometry indices
  Orientation orientation = Orientation::Vertical;
  int line = 0;
  int lo = 0, hi = 0;
};

struct SynthDoor {
  int room_a = 0, room_b = 0;
  Orientation orientation = Orientation::Vertical;
  int line = 0;
  int start = 0;  // first pixel along the wall
  friend bool operator==(const SynthDoor&, const SynthDoor&) = default;
};

enum class PerturbOp { RemoveDoor, AddDoor, SwapRanks, PunchGap, DeleteDot, OffPaletteSpeck };

inline constexpr std::string_view to_string(PerturbOp op) {
  switch (op) {
    case PerturbOp::RemoveDoor: return "RemoveDoor";
    case PerturbOp::AddDoor: return "AddDoor";
    case PerturbOp::SwapRanks: return "SwapRanks";
    case PerturbOp::PunchGap: return "PunchGap";
    case PerturbOp::DeleteDot: return "DeleteDot";
    case PerturbOp::OffPaletteSpeck: return "OffPaletteSpeck";
  }
  return "?";
}

inline std::optional<PerturbOp> parse_perturb_op(std::string_view s) {
  for (PerturbOp op : {PerturbOp::RemoveDoor, PerturbOp::AddDoor, PerturbOp::SwapRanks, PerturbOp::PunchGap,
                       PerturbOp::DeleteDot, PerturbOp::OffPaletteSpeck})
    if (to_string(op) == s) return op;
  return std::nullopt;
}

struct SynthPlan {
  SynthConfig config;
  std::vector<RoomRect> rooms;
  std::vector<SynthDoor> doors;
  FloorPlanIR truth;
  PixelGrid raster{1, 1};

  // Set by raster-only perturbations: the raster deliberately breaks a rule
  // and no longer agrees with `truth`.
  bool rule_breaking = false;
  std::optional<int> expected_rule;
  // False after truth-only relabelling (SwapRanks).
  bool raster_matches_truth = true;
};

namespace synth_detail {

// Platform-independent draws on top of the fully specified mt19937_64.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline int half(const SynthConfig& c) { return (c.wall_width - 1) / 2; }

inline int interior_w(const RoomRect& r, const SynthConfig& c) { return r.x1 - r.x0 - c.wall_width; }
inline int interior_h(const RoomRect& r, const SynthConfig& c) { return r.y1 - r.y0 - c.wall_width; }

inline void check_config(const SynthConfig& c) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("invalid SynthConfig: " + m); };
  if (c.min_rooms < 1) fail("min rooms must be >= 1");
  if (c.max_rooms < c.min_rooms) fail("max rooms must be >= min rooms");
  if (c.wall_width < 1 || c.wall_width % 2 == 0) fail("wall width must be odd and >= 1");
  if (c.door_length <= c.wall_width) fail("door length must exceed wall width");
  if (!(c.min_area_margin > 0.0)) fail("area margin must be > 0");
  if (c.extra_door_prob < 0.0 || c.extra_door_prob > 1.0) fail("extra door probability must be in [0, 1]");
  if (c.dot_size < 1) fail("dot size must be >= 1");
  if (c.width < 8 || c.height < 8) fail("canvas too small");
  if (c.min_room_side < c.dot_size + 2) fail("min room side must exceed the dot size");
  if (c.outer_margin < half(c) + 1) fail("outer margin must leave a white frame");
}

// Square-ish leaves split across their longer side.
inline std::optional<std::pair<RoomRect, RoomRect>> try_split(const RoomRect& r, const SynthConfig& c,
                                                              std::mt19937_64& rng) {
  const int min_span = c.min_room_side + c.wall_width;
  const bool can_v = r.x1 - r.x0 >= 2 * min_span;
  const bool can_h = r.y1 - r.y0 >= 2 * min_span;
  if (!can_v && !can_h) return std::nullopt;
  bool vertical;
  if (can_v && can_h) {
    const double aspect = static_cast<double>(r.x1 - r.x0) / (r.y1 - r.y0);
    vertical = aspect > 1.25 ? true : aspect < 0.8 ? false : uniform01(rng) < 0.5;
  } else {
    vertical = can_v;
  }
  if (vertical) {
    const int s = uniform_int(rng, r.x0 + min_span, r.x1 - min_span);
    return std::pair{RoomRect{r.x0, r.y0, s, r.y1}, RoomRect{s, r.y0, r.x1, r.y1}};
  }
  const int s = uniform_int(rng, r.y0 + min_span, r.y1 - min_span);
  return std::pair{RoomRect{r.x0, r.y0, r.x1, s}, RoomRect{r.x0, s, r.x1, r.y1}};
}

inline std::optional<std::vector<RoomRect>> partition(int k, const SynthConfig& c, std::mt19937_64& rng) {
  const int m = c.outer_margin;
  std::vector<RoomRect> leaves{{m, m, c.width - 1 - m, c.height - 1 - m}};
  if (interior_w(leaves[0], c) < c.min_room_side || interior_h(leaves[0], c) < c.min_room_side) return std::nullopt;
  std::vector<bool> stuck(1, false);
  while (static_cast<int>(leaves.size()) < k) {
    // Pick a leaf with probability proportional to its area.
    double total = 0.0;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (!stuck[i]) total += static_cast<double>(interior_w(leaves[i], c)) * interior_h(leaves[i], c);
    if (total <= 0.0) return std::nullopt;
    double pick = uniform01(rng) * total;
    std::size_t chosen = leaves.size();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (stuck[i]) continue;
      chosen = i;
      pick -= static_cast<double>(interior_w(leaves[i], c)) * interior_h(leaves[i], c);
      if (pick < 0.0) break;
    }
    auto halves = try_split(leaves[chosen], c, rng);
    if (!halves) {
      stuck[chosen] = true;
      continue;
    }
    leaves[chosen] = halves->first;
    leaves.push_back(halves->second);
    stuck[chosen] = false;
    stuck.push_back(false);
  }
  return leaves;
}

inline std::int64_t room_area(const RoomRect& r, const SynthConfig& c) {
  return static_cast<std::int64_t>(interior_w(r, c)) * interior_h(r, c);
}

inline bool areas_separated(const std::vector<RoomRect>& rooms, const SynthConfig& c) {
  std::vector<std::int64_t> areas;
  for (const RoomRect& r : rooms) areas.push_back(room_area(r, c));
  std::sort(areas.begin(), areas.end(), std::greater<>());
  for (std::size_t i = 1; i < areas.size(); ++i)
    if (static_cast<double>(areas[i - 1] - areas[i]) < c.min_area_margin * static_cast<double>(areas[i - 1]))
      return false;
  return true;
}

/// Every pair of rooms sharing a wall segment with at least one pixel of
/// interior on both sides.
inline std::vector<SharedWall> shared_walls(const std::vector<RoomRect>& rooms, const SynthConfig& c) {
  const int h = half(c);
  std::vector<SharedWall> out;
  for (std::size_t i = 0; i < rooms.size(); ++i) {
    for (std::size_t j = 0; j < rooms.size(); ++j) {
      if (i == j) continue;
      const RoomRect& a = rooms[i];
      const RoomRect& b = rooms[j];
      if (a.x1 == b.x0) {
        const int lo = std::max(a.y0, b.y0) + h + 1;
        const int hi = std::min(a.y1, b.y1) - h - 1;
        if (lo <= hi) out.push_back({static_cast<int>(i), static_cast<int>(j), Orientation::Vertical, a.x1, lo, hi});
      }
      if (a.y1 == b.y0) {
        const int lo = std::max(a.x0, b.x0) + h + 1;
        const int hi = std::min(a.x1, b.x1) - h - 1;
        if (lo <= hi) out.push_back({static_cast<int>(i), static_cast<int>(j), Orientation::Horizontal, a.y1, lo, hi});
      }
    }
  }
  return out;
}

inline bool door_fits(const SharedWall& w, const SynthConfig& c) {
  return (w.hi - c.door_clearance) - (w.lo + c.door_clearance) + 1 >= c.door_length;
}

inline SynthDoor place_door(const SharedWall& w, const SynthConfig& c, std::mt19937_64& rng) {
  const int first = w.lo + c.door_clearance;
  const int last = w.hi - c.door_clearance - c.door_length + 1;
  return {w.room_a, w.room_b, w.orientation, w.line, uniform_int(rng, first, last)};
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int groups = n;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --groups;
    }
  }
  return groups == 1;
}

/// Uniform spanning tree via Wilson's loop-erased random walks. Returns
/// indices into `walls`.
inline std::vector<std::size_t> uniform_spanning_tree(int n, const std::vector<SharedWall>& walls,
                                                      std::mt19937_64& rng) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    adj[walls[i].room_a].push_back({walls[i].room_b, i});
    adj[walls[i].room_b].push_back({walls[i].room_a, i});
  }
  std::vector<bool> in_tree(n, false);
  std::vector<int> next(n, -1);
  std::vector<std::size_t> via(n, 0);
  in_tree[uniform_int(rng, 0, n - 1)] = true;
  std::vector<std::size_t> tree;
  for (int start = 0; start < n; ++start) {
    int u = start;
    while (!in_tree[u]) {
      const auto& [v, wall] = adj[u][uniform_int(rng, 0, static_cast<int>(adj[u].size()) - 1)];
      next[u] = v;
      via[u] = wall;
      u = v;
    }
    u = start;
    while (!in_tree[u]) {
      in_tree[u] = true;
      tree.push_back(via[u]);
      u = next[u];
    }
  }
  return tree;
}

struct RoomView {
  std::int64_t area;
  Point centroid;
};

inline Point interior_centroid(const RoomRect& r, const SynthConfig& c) {
  const int h = half(c);
  const int ix0 = r.x0 + h + 1, ix1 = r.x1 - h - 1;
  const int iy0 = r.y0 + h + 1, iy1 = r.y1 - h - 1;
  return {(ix0 + ix1 + 1) / 2, (iy0 + iy1 + 1) / 2};
}

inline Point door_center(const SynthDoor& d, const SynthConfig& c) {
  const int along = (2 * d.start + c.door_length) / 2;
  return d.orientation == Orientation::Vertical ? Point{d.line, along} : Point{along, d.line};
}

inline void merge_intervals(std::vector<std::pair<double, double>>& v) {
  std::sort(v.begin(), v.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.first <= out.back().second) out.back().second = std::max(out.back().second, iv.second);
    else out.push_back(iv);
  }
  v = std::move(out);
}

}  // namespace synth_detail

/// Ground truth computed from the rectangles and door placements.
inline FloorPlanIR truth_from_geometry(const std::vector<RoomRect>& rooms, const std::vector<SynthDoor>& doors,
                                       const SynthConfig& c) {
  using namespace synth_detail;
  std::vector<RoomView> views;
  for (const RoomRect& r : rooms) views.push_back({room_area(r, c), interior_centroid(r, c)});
  const std::vector<int> rank = rank_rooms(views);
  FloorPlanIR ir;
  for (std::size_t i = 0; i < rooms.size(); ++i) ir.rooms.push_back({rank[i], views[i].area, views[i].centroid});
  for (const SynthDoor& d : doors)
    ir.doors.push_back({door_center(d, c), d.orientation, {rank[d.room_a], rank[d.room_b]}});
  ir = canonical(std::move(ir));
  ir.edges = edges_from_doors(ir.doors);
  return ir;
}

/// Vector drawing of a plan: merged wall lines, then doors, then dots.
inline VectorPlan to_vector_plan(const std::vector<RoomRect>& rooms, const std::vector<SynthDoor>& doors,
                                 const SynthConfig& c) {
  using namespace synth_detail;
  const int h = half(c);
  const double w = c.wall_width;
  VectorPlan plan{c.width, c.height, {}};
  std::map<int, std::vector<std::pair<double, double>>> horizontal, vertical;
  for (const RoomRect& r : rooms) {
    horizontal[r.y0].push_back({r.x0 - h, r.x1 + h});
    horizontal[r.y1].push_back({r.x0 - h, r.x1 + h});
    vertical[r.x0].push_back({r.y0 - h, r.y1 + h});
    vertical[r.x1].push_back({r.y0 - h, r.y1 + h});
  }
  for (auto& [y, spans] : horizontal) {
    merge_intervals(spans);
    for (auto [a, b] : spans)
      plan.elements.push_back(VectorElement::segment({a, double(y)}, {b, double(y)}, ColorClass::Black, w));
  }
  for (auto& [x, spans] : vertical) {
    merge_intervals(spans);
    for (auto [a, b] : spans)
      plan.elements.push_back(VectorElement::segment({double(x), a}, {double(x), b}, ColorClass::Black, w));
  }
  for (const SynthDoor& d : doors) {
    const double s = d.start, e = d.start + c.door_length - 1;
    const double line = d.line;
    plan.elements.push_back(d.orientation == Orientation::Vertical
                                ? VectorElement::segment({line, s}, {line, e}, ColorClass::Green, w)
                                : VectorElement::segment({s, line}, {e, line}, ColorClass::Green, w));
  }
  for (const RoomRect& r : rooms) {
    const Point p = interior_centroid(r, c);
    plan.elements.push_back(VectorElement::dot({double(p.x), double(p.y)}, c.dot_size, ColorClass::Red));
  }
  return plan;
}

inline VectorPlan to_vector_plan(const SynthPlan& plan) { return to_vector_plan(plan.rooms, plan.doors, plan.config); }

namespace synth_detail {

struct Geometry {
  std::vector<RoomRect> rooms;
  std::vector<SynthDoor> doors;
};

inline Geometry generate_geometry(const SynthConfig& c) {
  check_config(c);
  std::mt19937_64 rng(c.seed);
  const int k = uniform_int(rng, c.min_rooms, c.max_rooms);
  for (int attempt = 0; attempt < c.max_attempts; ++attempt) {
    auto rooms = partition(k, c, rng);
    if (!rooms || !areas_separated(*rooms, c)) continue;
    std::vector<SharedWall> walls;
    for (const SharedWall& w : shared_walls(*rooms, c))
      if (door_fits(w, c)) walls.push_back(w);
    std::vector<std::pair<int, int>> pairs;
    for (const SharedWall& w : walls) pairs.push_back({w.room_a, w.room_b});
    if (!connected(k, pairs)) continue;

    Geometry g{std::move(*rooms), {}};
    std::vector<bool> used(walls.size(), false);
    for (std::size_t i : uniform_spanning_tree(k, walls, rng)) used[i] = true;
    for (std::size_t i = 0; i < walls.size(); ++i)
      if (!used[i] && uniform01(rng) < c.extra_door_prob) used[i] = true;
    for (std::size_t i = 0; i < walls.size(); ++i)
      if (used[i]) g.doors.push_back(place_door(walls[i], c, rng));
    return g;
  }
  throw GenerationError("could not generate a " + std::to_string(k) + "-room plan on a " + std::to_string(c.width) +
                        "x" + std::to_string(c.height) + " canvas after " + std::to_string(c.max_attempts) +
                        " attempts");
}

inline void rebuild(SynthPlan& plan) {
  plan.truth = truth_from_geometry(plan.rooms, plan.doors, plan.config);
  plan.raster = rasterize(to_vector_plan(plan));
}

}  // namespace synth_detail

inline SynthPlan generate(const SynthConfig& config) {
  auto g = synth_detail::generate_geometry(config);
  SynthPlan plan;
  plan.config = config;
  plan.rooms = std::move(g.rooms);
  plan.doors = std::move(g.doors);
  synth_detail::rebuild(plan);
  return plan;
}

/// An input-independent guess: the truth record of a fresh plan.
inline FloorPlanIR random_baseline(SynthConfig config, std::uint64_t seed) {
  config.seed = seed;
  auto g = synth_detail::generate_geometry(config);
  return truth_from_geometry(g.rooms, g.doors, config);
}

struct BaselineStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  std::size_t pairs = 0;
};

/// Mean composite between independent baseline plans. Pair i compares seeds
/// first_seed + 2i and first_seed + 2i + 1.
inline BaselineStats random_baseline_score(const SynthConfig& config, std::uint64_t first_seed, std::size_t pairs) {
  BaselineStats out;
  out.pairs = pairs;
  if (pairs == 0) return out;
  std::vector<double> scores;
  scores.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const FloorPlanIR a = random_baseline(config, first_seed + 2 * i);
    const FloorPlanIR b = random_baseline(config, first_seed + 2 * i + 1);
    scores.push_back(composite_score(a, b).composite);
  }
  for (double s : scores) out.mean += s;
  out.mean /= static_cast<double>(pairs);
  if (pairs > 1) {
    double ss = 0.0;
    for (double s : scores) ss += (s - out.mean) * (s - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(pairs - 1));
  }
  return out;
}

struct PerturbOptions {
  std::uint64_t seed = 0;
  // RemoveDoor: only remove doors whose loss keeps the plan connected.
  bool preserve_connectivity = false;
  int swap_a = 1;  // SwapRanks
  int swap_b = 2;
};

inline std::string render_to_svg(const SynthPlan& plan) {
  if (plan.rule_breaking)
    throw PreconditionError("plan carries a raster-only perturbation that has no vector form");
  return write_svg(to_vector_plan(plan));
}

/// Apply one perturbation. Geometry ops (RemoveDoor, AddDoor) rebuild the
/// raster and truth; SwapRanks relabels truth only; PunchGap, DeleteDot and
/// OffPaletteSpeck edit the raster only and record the rule they break.
inline SynthPlan perturb(const SynthPlan& plan, PerturbOp op, const PerturbOptions& opt = {}) {
  using namespace synth_detail;
  std::mt19937_64 rng(opt.seed);
  SynthPlan out = plan;
  const SynthConfig& c = plan.config;
  const int h = half(c);

  switch (op) {
    case PerturbOp::RemoveDoor: {
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < plan.doors.size(); ++i) {
        if (opt.preserve_connectivity) {
          std::vector<std::pair<int, int>> rest;
          for (std::size_t j = 0; j < plan.doors.size(); ++j)
            if (j != i) rest.push_back({plan.doors[j].room_a, plan.doors[j].room_b});
          if (!connected(static_cast<int>(plan.rooms.size()), rest)) continue;
        }
        candidates.push_back(i);
      }
      if (candidates.empty())
        throw PreconditionError(opt.preserve_connectivity ? "no door can be removed without disconnecting the plan"
                                                          : "plan has no doors to remove");
      const std::size_t victim = candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
      out.doors.erase(out.doors.begin() + static_cast<std::ptrdiff_t>(victim));
      rebuild(out);
      return out;
    }
    case PerturbOp::AddDoor: {
      std::vector<SharedWall> free_walls;
      for (const SharedWall& w : shared_walls(plan.rooms, c)) {
        if (!door_fits(w, c)) continue;
        const bool taken = std::any_of(plan.doors.begin(), plan.doors.end(), [&](const SynthDoor& d) {
          return (d.room_a == w.room_a && d.room_b == w.room_b) || (d.room_a == w.room_b && d.room_b == w.room_a);
        });
        if (!taken) free_walls.push_back(w);
      }
      if (free_walls.empty()) throw PreconditionError("every shared wall already has a door");
      out.doors.push_back(place_door(free_walls[uniform_int(rng, 0, static_cast<int>(free_walls.size()) - 1)], c, rng));
      rebuild(out);
      return out;
    }
    case PerturbOp::SwapRanks: {
      const int n = static_cast<int>(plan.truth.rooms.size());
      if (opt.swap_a < 1 || opt.swap_b < 1 || opt.swap_a > n || opt.swap_b > n || opt.swap_a == opt.swap_b)
        throw PreconditionError("SwapRanks needs two distinct existing ranks");
      auto swap = [&](int r) { return r == opt.swap_a ? opt.swap_b : r == opt.swap_b ? opt.swap_a : r; };
      for (DoorEntry& d : out.truth.doors)
        for (int& r : d.rooms) r = swap(r);
      for (Edge& e : out.truth.edges) e = Edge::of(swap(e.a), swap(e.b));
      out.truth = canonical(std::move(out.truth));
      out.raster_matches_truth = false;
      return out;
    }
    case PerturbOp::PunchGap: {
      // A one-pixel-wide opening straight through a shared wall, away from doors.
      struct Cut {
        SharedWall wall;
        int at;
      };
      std::vector<Cut> cuts;
      for (const SharedWall& w : shared_walls(plan.rooms, c)) {
        for (int t = w.lo; t <= w.hi; ++t) {
          const bool on_door = std::any_of(plan.doors.begin(), plan.doors.end(), [&](const SynthDoor& d) {
            return d.orientation == w.orientation && d.line == w.line && t >= d.start - 1 &&
                   t <= d.start + c.door_length;
          });
          if (!on_door) cuts.push_back({w, t});
        }
      }
      if (cuts.empty()) throw PreconditionError("plan has no interior wall to punch");
      const Cut cut = cuts[uniform_int(rng, 0, static_cast<int>(cuts.size()) - 1)];
      for (int k = -h; k <= h; ++k) {
        if (cut.wall.orientation == Orientation::Vertical) out.raster.set(cut.wall.line + k, cut.at, ColorClass::White);
        else out.raster.set(cut.at, cut.wall.line + k, ColorClass::White);
      }
      out.rule_breaking = true;
      out.expected_rule = 7;
      out.raster_matches_truth = false;
      return out;
    }
    case PerturbOp::DeleteDot: {
      if (plan.rooms.empty()) throw PreconditionError("plan has no rooms");
      const RoomRect& r = plan.rooms[uniform_int(rng, 0, static_cast<int>(plan.rooms.size()) - 1)];
      const Point p = interior_centroid(r, c);
      const int lo = c.dot_size / 2;
      for (int y = p.y - lo; y < p.y - lo + c.dot_size; ++y)
        for (int x = p.x - lo; x < p.x - lo + c.dot_size; ++x)
          if (out.raster.at(x, y) == ColorClass::Red) out.raster.set(x, y, ColorClass::White);
      out.rule_breaking = true;
      out.expected_rule = 6;
      out.raster_matches_truth = false;
      return out;
    }
    case PerturbOp::OffPaletteSpeck: {
      const int x = uniform_int(rng, 0, out.raster.width() - 1);
      const int y = uniform_int(rng, 0, out.raster.height() - 1);
      out.raster.set(x, y, ColorClass::Other);
      out.rule_breaking = true;
      out.expected_rule = 8;
      out.raster_matches_truth = false;
      return out;
    }
  }
  throw PreconditionError("unknown perturbation");
}

}  // namespace blueprint
