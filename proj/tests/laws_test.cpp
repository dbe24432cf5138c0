#include "softgt/laws.hpp"

#include <gtest/gtest.h>

namespace {

using namespace softgt;

constexpr std::uint64_t kSeed = 77;
constexpr std::size_t kCount = 60;

void expect_passed(const LawReport& r) {
  EXPECT_GT(r.checks, 0U) << r.name;
  EXPECT_EQ(r.instances, kCount) << r.name;
  EXPECT_TRUE(r.passed()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}

TEST(Laws, SoftAlgebra) { expect_passed(law_soft_algebra(kSeed, kCount)); }
TEST(Laws, Operators) { expect_passed(law_operators(kSeed, kCount)); }
TEST(Laws, RegularFromOperators) { expect_passed(law_regular_from_operators(kSeed, kCount)); }
TEST(Laws, RegularizationIdempotence) { expect_passed(law_regularization_idempotence(kSeed, kCount)); }
TEST(Laws, SubspaceTraceOnQuasiTopologies) { expect_passed(law_subspace_trace(kSeed, kCount, true)); }
TEST(Laws, PerParameterCorrespondence) {
  expect_passed(law_a_universal_correspondence(kSeed, kCount, BasisStyle::per_parameter));
}
TEST(Laws, FormulationEquivalence) { expect_passed(law_formulation_equivalence(kSeed, kCount)); }
TEST(Laws, FipDuality) { expect_passed(law_fip_duality(kSeed, kCount)); }
TEST(Laws, Projection) { expect_passed(law_projection(kSeed, kCount)); }

TEST(Laws, Deterministic) {
  const LawReport x = law_subspace_trace(5, 200), y = law_subspace_trace(5, 200);
  EXPECT_EQ(x.checks, y.checks);
  EXPECT_EQ(x.failures, y.failures);
  EXPECT_EQ(x.first_failure, y.first_failure);
}

// Without closure under meets the subspace can gain regular-open sets that
// are not traces. X = {0,1,3}, opens {}, {3}, {1,3}, {0,1}, {0,3}, X and
// b = {0,1}: the subspace is discrete while RO(g) = {{}, {3}, {0,1}, X}.
TEST(SubspaceTrace, FailsOutsideQuasiTopologies) {
  const FramePtr frame = make_frame({"0", "1", "3"}, {"r1"});
  constexpr PointSet p0 = 1, p1 = 2, p3 = 4;
  const SGTS g(SoftSet::universal(frame),
               {SoftSet(frame, {p3}), SoftSet(frame, {p1 | p3}), SoftSet(frame, {p0 | p1}), SoftSet(frame, {p0 | p3})});
  EXPECT_FALSE(g.is_quasi_topology());
  const std::vector<SoftSet> ro = enumerate_regular_open(g);
  EXPECT_EQ(ro.size(), 4U);
  const SoftSet b(frame, {p0 | p1});
  const SGTS sub = subspace(g, b);
  EXPECT_EQ(enumerate_regular_open(sub).size(), 4U);
  EXPECT_TRUE(sub.is_regular_open(SoftSet(frame, {p0})));
  for (const auto& u : ro) EXPECT_NE(soft_intersection(u, b), SoftSet(frame, {p0}));
}

// A general basis couples parameters: a soft set can be soft regular open
// without its projections being regular open.
TEST(Correspondence, GeneralBasesCoupleParameters) {
  const LawReport r = law_a_universal_correspondence(kSeed, 200, BasisStyle::general);
  EXPECT_GT(r.failures, 0U);
  EXPECT_FALSE(r.first_failure.empty());
}

}  // namespace
