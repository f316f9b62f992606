#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include <sectorkit/double.hpp>

#include "fixtures.hpp"

using namespace sectorkit;

TEST(DoubleSectors, S3Dimensions) {
  const auto sectors = enumerate_double_sectors(fixtures::build(fixtures::s3()));
  ASSERT_EQ(sectors.size(), 8u);
  std::vector<std::int64_t> dims;
  std::int64_t sum_sq = 0;
  for (const auto& s : sectors) {
    dims.push_back(s.qdim);
    sum_sq += s.qdim * s.qdim;
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::int64_t>{1, 1, 2, 2, 2, 2, 3, 3}));
  EXPECT_EQ(sum_sq, 36);
  EXPECT_EQ(sectors[0].class_index, 0u);
  EXPECT_EQ(sectors[0].centralizer_irrep, 0u);
}

TEST(DoubleSectors, DimensionIdentityAcrossGroups) {
  for (const auto& g : fixtures::zoo()) {
    const auto sectors = enumerate_double_sectors(fixtures::build(g));
    std::int64_t sum_sq = 0;
    for (const auto& s : sectors) sum_sq += s.qdim * s.qdim;
    EXPECT_EQ(sum_sq, static_cast<std::int64_t>(g.order * g.order)) << g.name;
  }
}

TEST(DoubleModular, Z2ReproducesToricCode) {
  const auto md = double_modular_data(fixtures::build(fixtures::z2()));
  const auto tc = toric_code();
  EXPECT_LT(max_abs(md.S - tc.S), 1e-12);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_LT(std::abs(md.kappa[r] - tc.kappa[r]), 1e-12);
  EXPECT_LT(central_charge_mod8(md), 1e-9);
}

TEST(DoubleModular, CyclicTwistsAreCharacters) {
  // abelian Z4: sixteen sectors with kappa_(a, m) = i^{ma} and |S| = 1/4
  const auto md = double_modular_data(fixtures::build(fixtures::z4()));
  ASSERT_EQ(md.size(), 16u);
  for (Eigen::Index i = 0; i < 16; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) EXPECT_NEAR(std::abs(md.S(i, j)), 0.25, 1e-12);
  for (std::size_t r = 0; r < 16; ++r) {
    const cplx k4 = std::pow(md.kappa[r], 4);
    EXPECT_LT(std::abs(k4 - 1.0), 1e-12);
    EXPECT_NEAR(md.qdims[r], 1.0, 1e-12);
  }
}

TEST(DoubleModular, S3Properties) {
  const auto md = double_modular_data(fixtures::build(fixtures::s3()));
  ASSERT_EQ(md.size(), 8u);
  EXPECT_LT(max_abs(md.S - md.S.transpose()), 1e-12);
  EXPECT_LT(check_modular_relations(md).max(), 1e-9);
  const auto f = verlinde_fusion(md);
  EXPECT_TRUE(fusion_algebra_axioms(f, md.conj).ok());
  const auto sectors = enumerate_double_sectors(fixtures::build(fixtures::s3()));
  for (std::size_t r = 0; r < md.size(); ++r) {
    EXPECT_NEAR(md.qdims[r], static_cast<double>(sectors[r].qdim), 1e-9);
    EXPECT_NEAR(perron_frobenius_dimension(f, r), md.qdims[r], 1e-9);
  }
  EXPECT_TRUE(nondegeneracy_check(md).nondegenerate);
  EXPECT_LT(central_charge_mod8(md), 1e-9);
  // twists: 1, 1, 1 on the identity class; cube roots of unity on the 3-cycles; +-1 on transpositions
  for (std::size_t r = 0; r < md.size(); ++r) {
    const int order = sectors[r].qdim == 3 ? 2 : (sectors[r].class_index == 0 ? 1 : 3);
    EXPECT_LT(std::abs(std::pow(md.kappa[r], order) - 1.0), 1e-12) << md.labels[r];
  }
}

TEST(DoubleModular, LargerGroupsPassRelations) {
  for (const auto& g : {fixtures::d4(), fixtures::q8(), fixtures::a4()}) {
    const auto md = double_modular_data(fixtures::build(g));
    EXPECT_LT(check_modular_relations(md).max(), 1e-9) << g.name;
    const auto f = verlinde_fusion(md);
    EXPECT_TRUE(fusion_algebra_axioms(f, md.conj).ok()) << g.name;
  }
}

TEST(DoubleModular, LabelsNameClassAndIrrep) {
  const auto md = double_modular_data(fixtures::build(fixtures::s3()));
  EXPECT_EQ(md.labels[0], "K0:pi0");
  EXPECT_EQ(md.labels.back(), "K2:pi1");
}
