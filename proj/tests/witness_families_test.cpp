#include "softgt/witness_families.hpp"

#include <gtest/gtest.h>

namespace {

using namespace softgt;

TEST(ExampleOnes, SubcoverGrowsNearSubcoverStaysAtOne) {
  const SoftInstance n2 = family_example_ones(2);
  EXPECT_EQ(minimal_subcover(n2.cover).size, 1U);
  EXPECT_EQ(minimal_near_subcover(n2.cover).size, 1U);

  const SoftInstance n3 = family_example_ones(3);
  EXPECT_EQ(n3.cover.members.size(), 2U);
  EXPECT_EQ(minimal_subcover(n3.cover).size, 2U);
  EXPECT_EQ(minimal_near_subcover(n3.cover).size, 1U);

  const SoftInstance n6 = family_example_ones(6, 3);
  EXPECT_EQ(minimal_subcover(n6.cover).size, 5U);
  EXPECT_EQ(minimal_near_subcover(n6.cover).size, 1U);

  EXPECT_THROW(family_example_ones(1), PreconditionError);
}

TEST(ExampleOnes, RowPatternCoverIsValid) {
  for (int n = 2; n <= 7; ++n) {
    const SoftInstance inst = family_example_ones_rows(n, 2);
    EXPECT_TRUE(diagnose_cover(inst.space, inst.cover.members).ok());
    for (const auto& m : inst.cover.members) EXPECT_TRUE(inst.space.is_open(m));
    EXPECT_LE(minimal_near_subcover(inst.cover).size, minimal_subcover(inst.cover).size);
  }
}

TEST(Pairs, SubcoverEqualsNearSubcover) {
  for (int m : {1, 2, 4}) {
    const PlainInstance inst = family_pairs(m);
    EXPECT_EQ(gt_minimal_subcover_size(inst.space, inst.cover), static_cast<std::size_t>(m));
    EXPECT_EQ(gt_minimal_near_subcover_size(inst.space, inst.cover), static_cast<std::size_t>(m));
  }
  EXPECT_THROW(family_pairs(0), PreconditionError);
}

TEST(DiscreteSubspace, EveryRowIsNeeded) {
  const SoftInstance one = family_discrete_subspace(1, 2);
  EXPECT_EQ(minimal_subcover(one.cover).size, 1U);

  const SoftInstance n3 = family_discrete_subspace(3, 1);
  EXPECT_EQ(minimal_subcover(n3.cover).size, 3U);
  EXPECT_EQ(minimal_near_subcover(n3.cover).size, 3U);

  const SoftInstance n4 = family_discrete_subspace(4, 2);
  EXPECT_EQ(minimal_subcover(n4.cover).size, 4U);
  EXPECT_EQ(minimal_near_subcover(n4.cover).size, 4U);
}

TEST(GrowthCertificates, RecordUnboundedGrowth) {
  const GrowthCertificate ones = growth_certificate(example_ones_family(), 8);
  EXPECT_EQ(ones.samples.size(), 7U);
  EXPECT_TRUE(ones.plain_unbounded);
  EXPECT_TRUE(ones.near_bounded);
  EXPECT_FALSE(ones.near_unbounded);

  const GrowthCertificate pairs = growth_certificate(pairs_family(), 6);
  EXPECT_TRUE(pairs.plain_unbounded);
  EXPECT_TRUE(pairs.near_unbounded);

  const GrowthCertificate discrete = growth_certificate(discrete_subspace_family(), 6);
  EXPECT_TRUE(discrete.plain_unbounded);
  EXPECT_TRUE(discrete.near_unbounded);
  for (const auto& s : discrete.samples) EXPECT_EQ(s.plain, static_cast<std::size_t>(s.index));
}

TEST(GrowthCertificates, ConstantFamilyCertifiesNothing) {
  const GrowthCertificate cert = growth_certificate(constant_family(), 10);
  EXPECT_FALSE(cert.plain_unbounded);
  EXPECT_FALSE(cert.near_unbounded);
  EXPECT_TRUE(cert.near_bounded);
  EXPECT_EQ(cert.conclusion, "no unbounded growth certified");
}

TEST(GrowthCertificates, MismatchThrows) {
  TruncationFamily wrong = example_ones_family();
  wrong.expected_plain = [](int n) { return static_cast<std::size_t>(n); };
  try {
    growth_certificate(wrong, 5);
    FAIL() << "expected CertificationFailure";
  } catch (const CertificationFailure& e) {
    EXPECT_EQ(e.index(), 2);
    EXPECT_EQ(e.family(), "family_example_ones");
  }
  EXPECT_THROW(growth_certificate(pairs_family(), 0), PreconditionError);
}

TEST(GrowthCertificates, Reproducible) {
  const GrowthCertificate x = growth_certificate(example_ones_family(), 7);
  const GrowthCertificate y = growth_certificate(example_ones_family(), 7);
  ASSERT_EQ(x.samples.size(), y.samples.size());
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    EXPECT_EQ(x.samples[i].plain_witness, y.samples[i].plain_witness);
    EXPECT_EQ(x.samples[i].near_witness, y.samples[i].near_witness);
  }
  EXPECT_EQ(x.conclusion, y.conclusion);
}

TEST(Registry, NamesResolve) {
  for (const auto& name : truncation_family_names()) EXPECT_EQ(truncation_family(name).name, name);
  EXPECT_THROW(truncation_family("family_nope"), StructuralError);
}

}  // namespace
