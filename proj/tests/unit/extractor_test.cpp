#include "support.hpp"

#include <gtest/gtest.h>

using namespace blueprint;
using testing_support::fill_block;

namespace {

// 60x60 box with 3-px walls split by a horizontal wall at rows 29..31 into
// two rooms, each with a 10x10 dot.
PixelGrid two_room_box() {
  PixelGrid g(60, 60);
  fill_block(g, 0, 0, 59, 2, ColorClass::Black);
  fill_block(g, 0, 57, 59, 59, ColorClass::Black);
  fill_block(g, 0, 0, 2, 59, ColorClass::Black);
  fill_block(g, 57, 0, 59, 59, ColorClass::Black);
  fill_block(g, 0, 29, 59, 31, ColorClass::Black);
  fill_block(g, 25, 11, 34, 20, ColorClass::Red);
  fill_block(g, 25, 39, 34, 48, ColorClass::Red);
  return g;
}

}  // namespace

TEST(RedBlobs, SingleBlockCenterRoundsHalfUp) {
  PixelGrid g(64, 64);
  fill_block(g, 25, 25, 34, 34, ColorClass::Red);
  EXPECT_EQ(detect_red_blobs(g), (std::vector<Point>{{30, 30}}));
}

TEST(RedBlobs, AllWhite) { EXPECT_TRUE(detect_red_blobs(PixelGrid(40, 40)).empty()); }

TEST(RedBlobs, StrayPixelsBelowNoiseFloor) {
  PixelGrid g(100, 100);
  fill_block(g, 5, 5, 14, 14, ColorClass::Red);
  fill_block(g, 60, 70, 69, 79, ColorClass::Red);
  g.set(40, 40, ColorClass::Red);
  g.set(41, 41, ColorClass::Red);
  g.set(90, 3, ColorClass::Red);
  EXPECT_EQ(detect_red_blobs(g).size(), 2u);
  EXPECT_EQ(find_red_blobs(g).size(), 4u);  // the diagonal pair is one 8-connected blob
}

TEST(SegmentRooms, TwoRoomsWithKnownAreas) {
  const PixelGrid g = two_room_box();
  const Segmentation seg = segment_rooms(g, detect_red_blobs(g));
  ASSERT_EQ(seg.regions.size(), 2u);
  // Interior spans columns 3..56 and rows 3..28 / 32..56.
  EXPECT_EQ(seg.regions[0].area, 54 * 26);
  EXPECT_EQ(seg.regions[1].area, 54 * 25);
  EXPECT_TRUE(seg.wall_dots.empty());
}

TEST(SegmentRooms, SharedRegionMergesDots) {
  PixelGrid g = two_room_box();
  g.set(40, 29, ColorClass::White);
  g.set(40, 30, ColorClass::White);
  g.set(40, 31, ColorClass::White);
  const Segmentation seg = segment_rooms(g, detect_red_blobs(g));
  ASSERT_EQ(seg.regions.size(), 1u);
  EXPECT_EQ(seg.regions[0].dots.size(), 2u);
}

TEST(SegmentRooms, DotOnWallIsRecorded) {
  const PixelGrid g = two_room_box();
  const Segmentation seg = segment_rooms(g, {Point{1, 1}});
  EXPECT_TRUE(seg.regions.empty());
  EXPECT_EQ(seg.wall_dots, (std::vector<Point>{{1, 1}}));
}

TEST(SegmentRooms, LabelsAreConsistentWithAreas) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SynthPlan plan = generate(testing_support::config_for(seed));
    const Segmentation seg = segment_rooms(plan.raster, detect_red_blobs(plan.raster));
    std::vector<std::int64_t> counted(seg.regions.size(), 0);
    std::int64_t traversable = 0;
    for (int y = 0; y < plan.raster.height(); ++y)
      for (int x = 0; x < plan.raster.width(); ++x) {
        if (is_traversable(plan.raster.at(x, y))) ++traversable;
        if (auto id = seg.labels.at(x, y)) ++counted[*id];
      }
    std::int64_t total = 0;
    for (const RoomRegion& r : seg.regions) {
      EXPECT_EQ(counted[r.id], r.area);
      total += r.area;
    }
    EXPECT_LE(total, traversable);
  }
}

TEST(DetectDoors, HorizontalDoorBetweenTwoRooms) {
  PixelGrid g = two_room_box();
  fill_block(g, 20, 29, 31, 31, ColorClass::Green);
  const Segmentation seg = segment_rooms(g, detect_red_blobs(g));
  const auto doors = detect_doors(g, seg.labels);
  ASSERT_EQ(doors.size(), 1u);
  EXPECT_EQ(doors[0].orientation, Orientation::Horizontal);
  EXPECT_EQ(doors[0].bbox_width, 12);
  EXPECT_EQ(doors[0].bbox_height, 3);
  EXPECT_EQ(doors[0].regions, (std::vector<int>{0, 1}));
}

TEST(DetectDoors, NoGreen) {
  const PixelGrid g = two_room_box();
  EXPECT_TRUE(detect_doors(g, segment_rooms(g, detect_red_blobs(g)).labels).empty());
}

TEST(DetectDoors, BoundaryDoorHasOneSide) {
  PixelGrid g = two_room_box();
  fill_block(g, 20, 0, 31, 2, ColorClass::Green);
  const Segmentation seg = segment_rooms(g, detect_red_blobs(g));
  const auto doors = detect_doors(g, seg.labels);
  ASSERT_EQ(doors.size(), 1u);
  EXPECT_EQ(doors[0].regions.size(), 1u);
  const FloorPlanIR ir = extract(g);
  EXPECT_EQ(ir.doors.size(), 1u);
  EXPECT_TRUE(ir.edges.empty());
}

TEST(Extract, AllWhite) {
  const FloorPlanIR ir = extract(PixelGrid(50, 50));
  EXPECT_TRUE(ir.rooms.empty());
  EXPECT_TRUE(ir.doors.empty());
  EXPECT_TRUE(mentions_rule(ir.violations, 6));
}

TEST(Extract, RoomsRankedByAreaAndLinkedByDoor) {
  PixelGrid g = two_room_box();
  fill_block(g, 20, 29, 31, 31, ColorClass::Green);
  const FloorPlanIR ir = extract(g);
  ASSERT_EQ(ir.rooms.size(), 2u);
  EXPECT_EQ(ir.rooms[0].rank, 1);
  EXPECT_EQ(ir.rooms[0].area, 54 * 26);
  EXPECT_EQ(ir.rooms[1].area, 54 * 25);
  EXPECT_EQ(ir.edges, (std::vector<Edge>{{1, 2}}));
  EXPECT_TRUE(ir.violations.empty());
}

TEST(Extract, RecoversSynthTruth) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SynthPlan plan = generate(testing_support::config_for(seed));
    const FloorPlanIR ir = extract(plan.raster);
    EXPECT_EQ(testing_support::structure(ir), testing_support::structure(plan.truth)) << "seed " << seed;
    EXPECT_TRUE(ir.violations.empty()) << "seed " << seed;
    EXPECT_EQ(extract(plan.raster), ir);
  }
}

TEST(Extract, FourRoomPlanMatchesTruth) {
  SynthConfig c;
  c.min_rooms = c.max_rooms = 4;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    c.seed = seed;
    const SynthPlan plan = generate(c);
    ASSERT_EQ(plan.truth.rooms.size(), 4u);
    EXPECT_EQ(testing_support::structure(extract(plan.raster)), plan.truth);
  }
}

TEST(Validate, AllWhiteHasNoDots) { EXPECT_TRUE(mentions_rule(validate(PixelGrid(100, 100)), 6)); }

TEST(Validate, CleanSynthPlans) {
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    EXPECT_TRUE(validate(generate(testing_support::config_for(seed)).raster).empty()) << "seed " << seed;
}

TEST(Validate, SeededPerturbationsCiteTheirRule) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const SynthPlan plan = generate(testing_support::config_for(seed));
    for (PerturbOp op : {PerturbOp::DeleteDot, PerturbOp::PunchGap, PerturbOp::OffPaletteSpeck}) {
      PerturbOptions po;
      po.seed = seed;
      const SynthPlan bad = perturb(plan, op, po);
      ASSERT_TRUE(bad.expected_rule);
      EXPECT_TRUE(mentions_rule(validate(bad.raster), *bad.expected_rule)) << to_string(op) << " seed " << seed;
    }
  }
}

TEST(Validate, OneWallPixelGapSharesRegion) {
  PixelGrid g = two_room_box();
  for (int y = 29; y <= 31; ++y) g.set(40, y, ColorClass::White);
  EXPECT_TRUE(mentions_rule(validate(g), 7));
}

TEST(Validate, TranslucentAndDoorOffWall) {
  PixelGrid g = two_room_box();
  g.set_translucent(true);
  fill_block(g, 10, 8, 14, 9, ColorClass::Green);
  const auto v = validate(g);
  EXPECT_TRUE(mentions_rule(v, 4));
  EXPECT_TRUE(mentions_rule(v, 1));
}

TEST(Validate, UnenclosedRoom) {
  PixelGrid g = two_room_box();
  fill_block(g, 57, 5, 59, 20, ColorClass::White);
  EXPECT_TRUE(mentions_rule(validate(g), 5));
}

TEST(Validate, NeverThrowsOnNoise) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    PixelGrid g(1 + static_cast<int>(rng() % 80), 1 + static_cast<int>(rng() % 80));
    for (int y = 0; y < g.height(); ++y)
      for (int x = 0; x < g.width(); ++x) g.set(x, y, static_cast<ColorClass>(rng() % 5));
    EXPECT_NO_THROW(validate(g));
    ValidatorOptions o;
    for (const auto& [rule, n] : [&] {
           std::map<int, std::size_t> m;
           for (const RuleViolation& v : validate(g, o)) ++m[v.rule];
           return m;
         }())
      EXPECT_LE(n, o.max_per_rule + 1) << "rule " << rule;
  }
}
