#include "softgt/soft_core.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace softgt;

constexpr PointSet a = 1, b = 2, c = 4;
constexpr PointSet X = a | b | c;

class ExampleSets : public ::testing::Test {
 protected:
  FramePtr frame = make_frame({"a", "b", "c"}, {"r1", "r2", "r3"});
  SoftSet s_a{frame, {X, b | c, 0}};
  SoftSet s_a1{frame, {b, b | c, 0}};
  SoftSet s_a2{frame, {a | c, c, 0}};
  SoftSet empty = SoftSet::empty(frame);
};

TEST_F(ExampleSets, Union) {
  EXPECT_EQ(soft_union(s_a1, s_a2), s_a);
  EXPECT_EQ(soft_union(s_a1, empty), s_a1);
  EXPECT_EQ(soft_union(s_a1, s_a1), s_a1);
}

TEST_F(ExampleSets, Intersection) {
  EXPECT_EQ(soft_intersection(s_a1, s_a2), SoftSet(frame, {0, c, 0}));
  EXPECT_EQ(soft_intersection(s_a1, empty), empty);
  EXPECT_EQ(soft_intersection(s_a2, s_a2), s_a2);
}

TEST_F(ExampleSets, Difference) {
  EXPECT_EQ(soft_difference(s_a, s_a1), SoftSet(frame, {a | c, 0, 0}));
  EXPECT_EQ(soft_difference(s_a1, empty), s_a1);
  EXPECT_EQ(soft_difference(s_a1, s_a1), empty);
}

TEST_F(ExampleSets, AbsoluteComplement) {
  EXPECT_EQ(soft_complement(empty), SoftSet::universal(frame));
  EXPECT_EQ(soft_complement(soft_complement(s_a2)), s_a2);
  EXPECT_EQ(soft_complement(s_a1), SoftSet(frame, {a | c, a, X}));
}

TEST_F(ExampleSets, Subset) {
  EXPECT_TRUE(is_soft_subset(s_a1, s_a));
  EXPECT_TRUE(is_soft_subset(empty, s_a2));
  EXPECT_FALSE(is_soft_subset(s_a, s_a1));
}

TEST(SoftPoint, RestrictedToSupport) {
  const FramePtr frame = make_frame({"a", "b", "c"}, {"r1", "r2"});
  const SoftSet s_a1(frame, {b, b | c});
  const SoftSet s_a(frame, {X, b | c});
  EXPECT_TRUE(is_soft_point("b", s_a1));
  EXPECT_FALSE(is_soft_point("a", s_a));
  EXPECT_FALSE(is_soft_point("c", SoftSet::empty(frame)));
  EXPECT_THROW(is_soft_point(7, s_a), StructuralError);
  EXPECT_THROW(is_soft_point("z", s_a), StructuralError);
}

TEST(SoftSet, RejectsMalformedInput) {
  const FramePtr frame = make_frame({"a", "b"}, {"r1"});
  EXPECT_THROW(SoftSet(frame, {1, 2}), StructuralError);
  EXPECT_THROW(SoftSet(frame, {4}), StructuralError);
  EXPECT_THROW(make_frame({"a", "a"}, {"r1"}), StructuralError);
  EXPECT_THROW(make_frame({}, {"r1"}), StructuralError);
  EXPECT_THROW(make_frame({"a"}, {}), StructuralError);
  EXPECT_THROW(Universe::numbered(65), StructuralError);
}

TEST(SoftSet, MismatchedFramesAreStructuralErrors) {
  const SoftSet s = SoftSet::universal(make_frame({"a", "b"}, {"r1"}));
  const SoftSet t = SoftSet::universal(make_frame({"a", "b", "c"}, {"r1"}));
  EXPECT_THROW(soft_union(s, t), StructuralError);
  EXPECT_THROW(soft_intersection(s, t), StructuralError);
  EXPECT_THROW(soft_difference(s, t), StructuralError);
  EXPECT_THROW(is_soft_subset(s, t), StructuralError);
  // Equal frames built separately are interchangeable.
  const SoftSet u = SoftSet::universal(make_frame({"a", "b"}, {"r1"}));
  EXPECT_EQ(soft_union(s, u), s);
}

TEST(SoftSet, DisplaySuppressesEmptyParameters) {
  const FramePtr frame = make_frame({"a", "b", "c"}, {"r1", "r2", "r3"});
  EXPECT_EQ(to_string(SoftSet(frame, {X, b | c, 0})), "{(r1,{a,b,c}),(r2,{b,c})}");
  EXPECT_EQ(to_string(SoftSet::empty(frame)), "{}");
  EXPECT_EQ(SoftSet(frame, {X, 0, c}).support(), (std::vector<std::size_t>{0, 2}));
}

TEST(SoftSet, AUniversal) {
  const FramePtr frame = make_frame({"a", "b", "c"}, {"r1", "r2", "r3"});
  const std::vector<std::size_t> support{0, 1};
  EXPECT_EQ(SoftSet::a_universal(frame, support), SoftSet(frame, {X, X, 0}));
}

TEST(SoftSet, PartialOrderOnRandomSets) {
  std::mt19937_64 rng(7);
  const FramePtr frame = make_frame({"1", "2", "3", "4"}, {"r1", "r2"});
  auto draw = [&] { return SoftSet(frame, {rng() & 15, rng() & 15}); };
  for (int i = 0; i < 2000; ++i) {
    const SoftSet s = draw(), t = draw(), u = draw();
    if (is_soft_subset(s, t) && is_soft_subset(t, u)) {
      EXPECT_TRUE(is_soft_subset(s, u));
    }
    if (is_soft_subset(s, t) && is_soft_subset(t, s)) {
      EXPECT_EQ(s, t);
    }
    EXPECT_EQ(is_soft_subset(s, t), soft_union(s, t) == t);
    EXPECT_EQ(soft_complement(soft_union(s, t)), soft_intersection(soft_complement(s), soft_complement(t)));
  }
}

}  // namespace
