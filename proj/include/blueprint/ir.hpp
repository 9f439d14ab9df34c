#pragma once

// Floor-plan interchange record (rooms ranked by size, doors, edges) and
// the simple room graph the scorer consumes.

#include <blueprint/raster.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace blueprint {

enum class Orientation : std::uint8_t { Horizontal, Vertical };

inline constexpr std::string_view to_string(Orientation o) {
  return o == Orientation::Horizontal ? "horizontal" : "vertical";
}

/// A broken format rule. `rule` is the 1-based rule number.
struct RuleViolation {
  int rule = 0;
  std::string description;
  std::optional<Point> location;

  friend bool operator==(const RuleViolation&, const RuleViolation&) = default;
};

struct RoomEntry {
  int rank = 0;  // 1 = largest
  std::int64_t area = 0;
  Point centroid;

  friend bool operator==(const RoomEntry&, const RoomEntry&) = default;
};

struct DoorEntry {
  Point center;
  Orientation orientation = Orientation::Horizontal;
  std::vector<int> rooms;  // incident rank ids, ascending

  friend bool operator==(const DoorEntry&, const DoorEntry&) = default;
};

/// Unordered rank pair stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  static Edge of(int x, int y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct FloorPlanIR {
  std::vector<RoomEntry> rooms;
  std::vector<DoorEntry> doors;
  std::vector<Edge> edges;
  std::vector<RuleViolation> violations;

  std::size_t room_count() const { return rooms.size(); }
  friend bool operator==(const FloorPlanIR&, const FloorPlanIR&) = default;
};

enum class IrErrorCode { Malformed, InvariantBreach };

class IrError : public std::runtime_error {
 public:
  IrError(IrErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  IrErrorCode code() const { return code_; }

 private:
  IrErrorCode code_;
};

/// Size ranks for regions exposing `area` and `centroid`: result[i] is the
/// rank of regions[i]. Larger area first; exact ties go to the centroid
/// that comes first in row-major order, then to input order.
template <typename Region>
std::vector<int> rank_rooms(std::span<const Region> regions) {
  std::vector<std::size_t> order(regions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& a = regions[i];
    const auto& b = regions[j];
    if (a.area != b.area) return a.area > b.area;
    return a.centroid < b.centroid;
  });
  std::vector<int> rank(regions.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;
  return rank;
}

template <typename Region>
std::vector<int> rank_rooms(const std::vector<Region>& regions) {
  return rank_rooms(std::span<const Region>(regions));
}

/// Sort rooms by rank, normalise and deduplicate edges, order doors by
/// center (row-major) and sort each door's incident ranks.
inline FloorPlanIR canonical(FloorPlanIR ir) {
  std::sort(ir.rooms.begin(), ir.rooms.end(), [](const RoomEntry& a, const RoomEntry& b) { return a.rank < b.rank; });
  for (Edge& e : ir.edges) e = Edge::of(e.a, e.b);
  std::sort(ir.edges.begin(), ir.edges.end());
  ir.edges.erase(std::unique(ir.edges.begin(), ir.edges.end()), ir.edges.end());
  for (DoorEntry& d : ir.doors) {
    std::sort(d.rooms.begin(), d.rooms.end());
    d.rooms.erase(std::unique(d.rooms.begin(), d.rooms.end()), d.rooms.end());
  }
  std::stable_sort(ir.doors.begin(), ir.doors.end(), [](const DoorEntry& a, const DoorEntry& b) {
    return std::tie(a.center.y, a.center.x, a.orientation, a.rooms) <
           std::tie(b.center.y, b.center.x, b.orientation, b.rooms);
  });
  return ir;
}

/// Throws IrError(InvariantBreach) if ranks are not exactly 1..n in
/// non-increasing area order, or an edge/door references a missing rank or
/// an edge is a self-loop.
inline void check_invariants(const FloorPlanIR& ir) {
  const int n = static_cast<int>(ir.rooms.size());
  for (int i = 0; i < n; ++i) {
    if (ir.rooms[i].rank != i + 1)
      throw IrError(IrErrorCode::InvariantBreach, "room ranks must be exactly 1.." + std::to_string(n) + " in order");
    if (ir.rooms[i].area < 0) throw IrError(IrErrorCode::InvariantBreach, "room area must be non-negative");
    if (i > 0 && ir.rooms[i].area > ir.rooms[i - 1].area)
      throw IrError(IrErrorCode::InvariantBreach,
                    "room " + std::to_string(i + 1) + " is larger than room " + std::to_string(i));
  }
  for (const Edge& e : ir.edges) {
    if (e.a == e.b) throw IrError(IrErrorCode::InvariantBreach, "self-loop edge on room " + std::to_string(e.a));
    if (e.a < 1 || e.b < 1 || e.a > n || e.b > n)
      throw IrError(IrErrorCode::InvariantBreach,
                    "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") references a missing room");
  }
  for (const DoorEntry& d : ir.doors)
    for (int r : d.rooms)
      if (r < 1 || r > n)
        throw IrError(IrErrorCode::InvariantBreach, "door references missing room " + std::to_string(r));
}

/// Simple undirected graph over ranks 1..n.
struct RoomGraph {
  int node_count = 0;
  std::set<Edge> edges;
  std::vector<int> degrees;  // degrees[rank - 1]

  friend bool operator==(const RoomGraph&, const RoomGraph&) = default;
};

inline RoomGraph to_graph(const FloorPlanIR& ir) {
  RoomGraph g;
  g.node_count = static_cast<int>(ir.rooms.size());
  g.degrees.assign(static_cast<std::size_t>(g.node_count), 0);
  for (const Edge& e : ir.edges) {
    const Edge n = Edge::of(e.a, e.b);
    if (n.a == n.b || n.a < 1 || n.b > g.node_count) continue;
    if (g.edges.insert(n).second) {
      ++g.degrees[n.a - 1];
      ++g.degrees[n.b - 1];
    }
  }
  return g;
}

/// Edges implied by a door list: every pair of incident ranks.
inline std::vector<Edge> edges_from_doors(std::span<const DoorEntry> doors) {
  std::vector<Edge> edges;
  for (const DoorEntry& d : doors)
    for (std::size_t i = 0; i < d.rooms.size(); ++i)
      for (std::size_t j = i + 1; j < d.rooms.size(); ++j) edges.push_back(Edge::of(d.rooms[i], d.rooms[j]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace blueprint
