#pragma once

// Composite similarity between a candidate plan and the ground truth.
//
// Six components, each in [0, 1], combined with weights
// 50 / 20 / 10 / 10 / 5 / 5 (edge overlap, degree correlation, density,
// room count, door count, door orientation). Rooms are compared by size
// rank, so a ranking mistake also shows up as a connectivity mistake.

#include <blueprint/ir.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>

namespace blueprint {

struct ScoreBreakdown {
  double edge_overlap = 0.0;
  double degree_corr = 0.0;
  double density_sim = 0.0;
  double room_count_sim = 0.0;
  double door_count_sim = 0.0;
  double orientation_sim = 0.0;
  double composite = 0.0;

  friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

// Integer percentages; the composite divides by 100 once so that an
// all-ones breakdown is exactly 1.0.
inline constexpr std::array<int, 6> kWeightPercent = {50, 20, 10, 10, 5, 5};

inline double weighted_composite(double edge, double degree, double density, double rooms, double doors,
                                 double orientation) {
  const auto& w = kWeightPercent;
  const double sum = w[0] * edge + w[1] * degree + w[2] * density + w[3] * rooms + w[4] * doors + w[5] * orientation;
  return std::clamp(sum / 100.0, 0.0, 1.0);
}

inline double edge_jaccard(const RoomGraph& a, const RoomGraph& b) {
  if (a.edges.empty() && b.edges.empty()) return 1.0;
  std::size_t common = 0;
  for (const Edge& e : a.edges) common += b.edges.count(e);
  const std::size_t all = a.edges.size() + b.edges.size() - common;
  return static_cast<double>(common) / static_cast<double>(all);
}

/// Pearson r of the rank-aligned degree vectors (ranks 1..min(na, nb)),
/// mapped to (r + 1) / 2. Identical vectors score 1; if either vector is
/// constant, falls back to 1 - mean |difference| / max degree.
inline double degree_correlation(const RoomGraph& a, const RoomGraph& b) {
  if (a.node_count == 0 && b.node_count == 0) return 1.0;
  const std::size_t m = static_cast<std::size_t>(std::min(a.node_count, b.node_count));
  if (m == 0) return 0.0;
  const auto da = std::span<const int>(a.degrees).first(m);
  const auto db = std::span<const int>(b.degrees).first(m);
  if (std::equal(da.begin(), da.end(), db.begin())) return 1.0;

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_a += da[i];
    mean_b += db[i];
  }
  mean_a /= static_cast<double>(m);
  mean_b /= static_cast<double>(m);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double xa = da[i] - mean_a;
    const double xb = db[i] - mean_b;
    cov += xa * xb;
    var_a += xa * xa;
    var_b += xb * xb;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    int max_degree = 0;
    double diff = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      max_degree = std::max({max_degree, da[i], db[i]});
      diff += std::abs(da[i] - db[i]);
    }
    if (max_degree == 0) return 1.0;
    return std::clamp(1.0 - diff / static_cast<double>(m) / max_degree, 0.0, 1.0);
  }
  const double r = std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
  return (r + 1.0) / 2.0;
}

inline double graph_density(const RoomGraph& g) {
  if (g.node_count < 2) return 0.0;
  const double possible = static_cast<double>(g.node_count) * (g.node_count - 1) / 2.0;
  return static_cast<double>(g.edges.size()) / possible;
}

inline double density_similarity(const RoomGraph& a, const RoomGraph& b) {
  return std::clamp(1.0 - std::abs(graph_density(a) - graph_density(b)), 0.0, 1.0);
}

inline double count_similarity(std::size_t x, std::size_t y) {
  if (x == 0 && y == 0) return 1.0;
  return static_cast<double>(std::min(x, y)) / static_cast<double>(std::max(x, y));
}

inline double orientation_similarity(const FloorPlanIR& a, const FloorPlanIR& b) {
  if (a.doors.empty() && b.doors.empty()) return 1.0;
  if (a.doors.empty() || b.doors.empty()) return 0.0;
  auto horizontal_share = [](const FloorPlanIR& ir) {
    const auto h = std::count_if(ir.doors.begin(), ir.doors.end(),
                                 [](const DoorEntry& d) { return d.orientation == Orientation::Horizontal; });
    return static_cast<double>(h) / static_cast<double>(ir.doors.size());
  };
  return std::clamp(1.0 - std::abs(horizontal_share(a) - horizontal_share(b)), 0.0, 1.0);
}

inline ScoreBreakdown composite_score(const FloorPlanIR& candidate, const FloorPlanIR& truth) {
  const RoomGraph gc = to_graph(candidate);
  const RoomGraph gt = to_graph(truth);
  ScoreBreakdown s;
  s.edge_overlap = edge_jaccard(gc, gt);
  s.degree_corr = degree_correlation(gc, gt);
  s.density_sim = density_similarity(gc, gt);
  s.room_count_sim = count_similarity(candidate.rooms.size(), truth.rooms.size());
  s.door_count_sim = count_similarity(candidate.doors.size(), truth.doors.size());
  s.orientation_sim = orientation_similarity(candidate, truth);
  s.composite = weighted_composite(s.edge_overlap, s.degree_corr, s.density_sim, s.room_count_sim, s.door_count_sim,
                                   s.orientation_sim);
  return s;
}

}  // namespace blueprint
