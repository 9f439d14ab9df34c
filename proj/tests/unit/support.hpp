#pragma once

#include <blueprint/blueprint.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

namespace testing_support {

namespace fs = std::filesystem;

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("blueprint-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

inline blueprint::SynthConfig config_for(std::uint64_t seed) {
  blueprint::SynthConfig c;
  c.seed = seed;
  return c;
}

// Structural part of a record: everything except violations.
inline blueprint::FloorPlanIR structure(blueprint::FloorPlanIR ir) {
  ir.violations.clear();
  return ir;
}

inline void fill_block(blueprint::PixelGrid& g, int x0, int y0, int x1, int y1, blueprint::ColorClass c) {
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) g.set(x, y, c);
}

}  // namespace testing_support

namespace testing_support {

// Random valid record: n rooms with strictly decreasing areas, doors between
// random pairs (occasionally one-sided), edges derived from the doors.
inline blueprint::FloorPlanIR random_ir(std::mt19937_64& rng, int max_rooms = 8) {
  using namespace blueprint;
  FloorPlanIR ir;
  const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_rooms + 1));
  std::int64_t area = 100000;
  for (int i = 1; i <= n; ++i) {
    area -= 1 + static_cast<std::int64_t>(rng() % 5000);
    ir.rooms.push_back({i, area, {static_cast<int>(rng() % 1000), static_cast<int>(rng() % 1000)}});
  }
  const int doors = n == 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % (2 * n + 1));
  for (int i = 0; i < doors; ++i) {
    DoorEntry d;
    d.center = {static_cast<int>(rng() % 1000), static_cast<int>(rng() % 1000)};
    d.orientation = rng() % 2 ? Orientation::Horizontal : Orientation::Vertical;
    if (n >= 1) d.rooms.push_back(1 + static_cast<int>(rng() % n));
    if (n >= 2 && rng() % 5 != 0) {
      int other = 1 + static_cast<int>(rng() % n);
      if (other != d.rooms[0]) d.rooms.push_back(other);
    }
    ir.doors.push_back(d);
  }
  ir = canonical(std::move(ir));
  ir.edges = edges_from_doors(ir.doors);
  return ir;
}

}  // namespace testing_support
