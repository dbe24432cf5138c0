#include "softgt/gt_space.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "softgt/random_instances.hpp"

namespace {

using namespace softgt;

// Points 1..n are bits 0..n-1.
constexpr PointSet pts(std::initializer_list<int> xs) {
  PointSet s = 0;
  for (int x : xs) s |= singleton(static_cast<std::size_t>(x - 1));
  return s;
}

GTS pair_space(int n) {
  SetFamily base;
  for (int k = 1; k < n; ++k) base.push_back(pts({k, k + 1}));
  return generate_gt(Universe::numbered(static_cast<std::size_t>(n)), base);
}

TEST(GenerateGt, PairBaseUnionClosure) {
  const GTS g = pair_space(4);
  const SetFamily expected{0, pts({1, 2}), pts({2, 3}), pts({1, 2, 3}), pts({3, 4}), pts({2, 3, 4}), pts({1, 2, 3, 4})};
  SetFamily sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(g.opens(), sorted);
  EXPECT_TRUE(g.mu_space());

  std::set<oracle::Rows> brute = oracle::all_unions({{pts({1, 2})}, {pts({2, 3})}, {pts({3, 4})}}, 1);
  ASSERT_EQ(brute.size(), sorted.size());
  std::size_t i = 0;
  for (const auto& row : brute) EXPECT_EQ(row[0], sorted[i++]);
}

TEST(GenerateGt, EmptyAndDiscreteBases) {
  const GTS none = generate_gt(Universe::numbered(3), {});
  EXPECT_EQ(none.opens(), SetFamily{0});
  EXPECT_FALSE(none.mu_space());

  const GTS discrete = generate_gt(Universe::numbered(4), {pts({1}), pts({2}), pts({3}), pts({4})});
  EXPECT_EQ(discrete.opens().size(), 16U);
}

TEST(GenerateGt, RejectsForeignBaseMember) {
  EXPECT_THROW(generate_gt(Universe::numbered(2), {pts({3})}), StructuralError);
}

TEST(GtOperators, InteriorAndClosure) {
  const GTS g = pair_space(4);
  EXPECT_EQ(g.closure(pts({1, 2})), pts({1, 2}));
  EXPECT_EQ(g.closure(pts({2, 3})), g.all());
  EXPECT_EQ(g.interior(0), 0U);
  EXPECT_EQ(g.interior(pts({1, 3, 4})), pts({3, 4}));
  EXPECT_THROW(g.interior(pts({5})), StructuralError);
}

TEST(GtOperators, RegularOpen) {
  const GTS g = pair_space(4);
  EXPECT_TRUE(g.is_regular_open(pts({1, 2})));
  EXPECT_FALSE(g.is_regular_open(pts({2, 3})));
  EXPECT_TRUE(g.is_regular_open(0));
  EXPECT_FALSE(g.is_quasi_topology());
}

TEST(LocalFiniteness, FiniteScale) {
  const GTS g = pair_space(4);
  EXPECT_TRUE(is_mu_locally_finite(g, {pts({1, 2}), pts({3, 4})}));
  EXPECT_TRUE(is_mu_locally_finite(g, {}));
  // Outside mu-spaces some point may lie in no open set; the predicate is not defined there.
  const GTS partial = generate_gt(Universe::numbered(3), {pts({1})});
  EXPECT_THROW(is_mu_locally_finite(partial, {pts({1})}), PreconditionError);
}

TEST(Refinement, ContainmentScan) {
  const GTS g = pair_space(4);
  const SetFamily odd{pts({1, 2}), pts({3, 4})};
  EXPECT_TRUE(is_mu_open_refinement(g, odd, odd));
  EXPECT_FALSE(is_mu_open_refinement(g, {pts({1, 2}), pts({2, 3}), pts({3, 4})}, odd));
  EXPECT_TRUE(is_mu_open_refinement(g, odd, {pts({1, 2, 3}), pts({3, 4})}));
  // Not a cover of X.
  EXPECT_FALSE(is_mu_open_refinement(g, {pts({1, 2})}, odd));
}

TEST(Subcovers, PairsAndFullBase) {
  const GTS g4 = pair_space(4);
  const SetFamily odd{pts({1, 2}), pts({3, 4})};
  EXPECT_EQ(gt_minimal_subcover_size(g4, odd), 2U);
  EXPECT_EQ(gt_minimal_near_subcover_size(g4, odd), 2U);
  EXPECT_EQ(gt_minimal_subcover_size(g4, {pts({2, 3}), g4.all()}), 1U);

  const GTS g6 = pair_space(6);
  const SubcoverResult r = gt_minimal_subcover(g6, g6.base());
  EXPECT_EQ(r.size, 3U);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 2, 4}));

  EXPECT_THROW(gt_minimal_subcover(g6, {pts({1, 2})}), PreconditionError);
  EXPECT_THROW(gt_minimal_subcover(g6, {pts({1, 2, 3, 4, 5, 6}), pts({1})}), PreconditionError);
}

TEST(Subcovers, AgreeWithBruteForceAndNearNeverExceedsPlain) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GTS g = random_mu_space(rng, 6, 6);
    const SetFamily opens = g.opens();
    SetFamily cover;
    for (PointSet o : opens)
      if (o != 0 && (rng() & 1U)) cover.push_back(o);
    cover.push_back(g.all());
    if (cover.size() > 12) cover.erase(cover.begin(), cover.end() - 12);

    std::vector<oracle::Rows> rows;
    for (PointSet v : cover) rows.push_back({v});
    const auto expected = oracle::min_cover(rows, {g.all()});
    const SubcoverResult plain = gt_minimal_subcover(g, cover);
    EXPECT_EQ(plain.indices, expected);

    const std::size_t near = gt_minimal_near_subcover_size(g, cover);
    EXPECT_LE(near, plain.size);
    for (PointSet a = 0; a <= g.all(); ++a) EXPECT_EQ(g.regularize(g.regularize(a)), g.regularize(a));
  }
}

TEST(Paracompactness, IdentityRefinementOfRegularOpenFamily) {
  EXPECT_TRUE(is_n_mu_paracompact_finite(pair_space(6)));
  EXPECT_THROW(is_n_mu_paracompact_finite(generate_gt(Universe::numbered(2), {pts({1})})), PreconditionError);
}

TEST(Opens, EnumerationLimit) {
  SetFamily singletons;
  for (int x = 1; x <= 20; ++x) singletons.push_back(pts({x}));
  const GTS g = generate_gt(Universe::numbered(20), singletons);
  EXPECT_THROW(g.opens(), ThresholdExceeded);
  // Operators still work through the base.
  EXPECT_TRUE(g.is_regular_open(pts({3, 7})));
}

}  // namespace
