#include <gtest/gtest.h>

#include "toric/corpus.hpp"
#include "toric/fan.hpp"

namespace toric {
namespace {

Cone c2(std::initializer_list<LatticeVector> gens) { return new_cone(std::vector<LatticeVector>(gens), 2); }

Fan p2() {
  return validate_fan(2, {c2({{1, 0}, {0, 1}}), c2({{0, 1}, {-1, -1}}), c2({{-1, -1}, {1, 0}})});
}

TEST(Fan, ProjectivePlane) {
  Fan f = p2();
  EXPECT_EQ(f.size(), 7u);
  EXPECT_EQ(skeleton(f, 0).size(), 1u);
  EXPECT_EQ(skeleton(f, 1).size(), 3u);
  EXPECT_EQ(skeleton(f, 2).size(), 3u);
  EXPECT_EQ(fan_rays(f).size(), 3u);
  EXPECT_EQ(codim_le1_subfan(f).size(), 4u);
  EXPECT_EQ(maximal_cones(f).size(), 3u);
  EXPECT_TRUE(f.contains(c2({{-1, -1}})));
  EXPECT_FALSE(f.contains(c2({{1, 1}})));
}

TEST(Fan, OverlappingConesRejected) {
  const Cone a = c2({{1, 0}, {1, 2}});
  const Cone b = c2({{1, 1}, {0, 1}});
  try {
    validate_fan(2, {a, b});
    FAIL() << "expected FanError";
  } catch (const FanError& e) {
    EXPECT_EQ(e.intersection(), c2({{1, 1}, {1, 2}}));
    EXPECT_TRUE((e.first() == a && e.second() == b) || (e.first() == b && e.second() == a));
  }
}

TEST(Fan, ProjectiveLine) {
  Fan f = validate_fan(1, {new_cone({{1}}, 1), new_cone({{-1}}, 1)});
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(maximal_cones(f).size(), 2u);
}

TEST(Fan, EmptyInputIsZeroFan) {
  Fan f = validate_fan(3, {});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.cones().front().is_zero());
  EXPECT_EQ(maximal_cones(f).size(), 1u);
}

TEST(Fan, RankMismatchRejected) {
  EXPECT_THROW(validate_fan(3, {c2({{1, 0}})}), std::invalid_argument);
}

TEST(Fan, ClosureIsIdempotent) {
  for (const auto& ex : named_examples()) {
    if (!std::holds_alternative<Fan>(ex.object)) continue;
    const Fan& f = std::get<Fan>(ex.object);
    EXPECT_EQ(validate_fan(f.ambient_rank(), f.cones()), f) << ex.name;
    EXPECT_EQ(validate_fan(f.ambient_rank(), maximal_cones(f)), f) << ex.name;
  }
}

TEST(Fan, SubfanIsAFan) {
  Fan f = p2();
  Fan sub = codim_le1_subfan(f);
  EXPECT_EQ(validate_fan(2, sub.cones()), sub);
  for (const auto& c : sub.cones()) {
    EXPECT_LE(c.dim(), 1u);
    EXPECT_TRUE(f.contains(c));
  }
}

TEST(Fan, SingleConeFanIsItsFaces) {
  const Cone conifold =
      new_cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3);
  Fan f = validate_fan(3, {conifold});
  EXPECT_EQ(f.cones(), faces(conifold));
  EXPECT_EQ(maximal_cones(f), std::vector<Cone>{conifold});
}

}  // namespace
}  // namespace toric
