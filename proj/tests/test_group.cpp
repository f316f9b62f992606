#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <set>

#include <sectorkit/group.hpp>

#include "fixtures.hpp"

using namespace sectorkit;

namespace {

std::set<Permutation> brute_closure(const fixtures::NamedGroup& g) {
  std::set<Permutation> seen{Permutation::identity(g.degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<Permutation>(seen.begin(), seen.end()))
      for (const auto& b : g.gens)
        grew |= seen.insert(a * b).second;
  }
  return seen;
}

std::set<Permutation> brute_class(const std::set<Permutation>& group, const Permutation& x) {
  std::set<Permutation> cls;
  for (const auto& h : group) cls.insert(h * x * h.inverse());
  return cls;
}

}  // namespace

TEST(GroupClosure, MatchesBruteForce) {
  for (const auto& g : fixtures::zoo()) {
    const auto group = fixtures::build(g);
    const auto oracle = brute_closure(g);
    EXPECT_EQ(group.order(), g.order) << g.name;
    EXPECT_EQ(group.order(), oracle.size()) << g.name;
    EXPECT_TRUE(group.elements[0].is_identity()) << g.name;
    for (const auto& e : group.elements) EXPECT_TRUE(oracle.count(e)) << g.name;
  }
}

TEST(GroupClosure, MultiplicationTableAgreesWithComposition) {
  const auto group = fixtures::build(fixtures::s4());
  ASSERT_TRUE(group.has_mult_table());
  for (std::size_t a = 0; a < group.order(); ++a) {
    EXPECT_EQ(group.elements[group.inverse(a)], group.elements[a].inverse());
    for (std::size_t b = 0; b < group.order(); ++b)
      EXPECT_EQ(group.elements[group.mult(a, b)], group.elements[a] * group.elements[b]);
  }
}

TEST(GroupClosure, RejectsBadGenerators) {
  EXPECT_THROW(enumerate_group(3, {Permutation{{0, 0, 1}}}), Error);
  EXPECT_THROW(enumerate_group(3, {Permutation{{0, 1}}}), Error);
  try {
    enumerate_group(3, {Permutation{{0, 1, 3}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPermutation);
  }
}

TEST(GroupClosure, OrderCap) {
  GroupOptions opts;
  opts.order_cap = 10;
  try {
    enumerate_group(4, fixtures::s4().gens, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(GroupClosure, LargeGroupWithoutTable) {
  // S6, order 720, with the table disabled
  GroupOptions opts;
  opts.table_limit = 0;
  const auto group = enumerate_group(6, {Permutation{{1, 0, 2, 3, 4, 5}}, Permutation{{1, 2, 3, 4, 5, 0}}}, opts);
  EXPECT_EQ(group.order(), 720u);
  EXPECT_FALSE(group.has_mult_table());
  EXPECT_EQ(conjugacy_classes(group).class_count(), 11u);
}

TEST(Conjugacy, PartitionMatchesBruteForce) {
  for (const auto& g : fixtures::zoo()) {
    const auto group = fixtures::build(g);
    const auto oracle = brute_closure(g);
    const auto cd = conjugacy_classes(group);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cd.class_count(); ++i) {
      std::set<Permutation> mine;
      for (auto e : cd.members[i]) mine.insert(group.elements[e]);
      EXPECT_EQ(mine, brute_class(oracle, group.elements[cd.reps[i]])) << g.name;
      EXPECT_EQ(cd.reps[i], cd.members[i].front());
      total += cd.sizes[i];
      if (i > 0) {
        const bool ordered = cd.sizes[i - 1] < cd.sizes[i] ||
                             (cd.sizes[i - 1] == cd.sizes[i] && cd.reps[i - 1] < cd.reps[i]);
        EXPECT_TRUE(ordered) << g.name;
      }
    }
    EXPECT_EQ(total, group.order());
    EXPECT_EQ(cd.sizes[0], 1u);
    EXPECT_EQ(cd.reps[0], 0u);
  }
}

TEST(Conjugacy, KnownClassSizes) {
  auto sizes = [](const fixtures::NamedGroup& g) {
    auto s = conjugacy_classes(fixtures::build(g)).sizes;
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(sizes(fixtures::s3()), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sizes(fixtures::z4()), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(sizes(fixtures::s4()), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(sizes(fixtures::d4()), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(sizes(fixtures::q8()), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(sizes(fixtures::a4()), (std::vector<std::size_t>{1, 3, 4, 4}));
}

TEST(ClassFusion, MatchesPairCounting) {
  for (const auto& g : fixtures::zoo()) {
    const auto group = fixtures::build(g);
    const auto cd = conjugacy_classes(group);
    const auto fusion = class_fusion(group, cd);
    for (std::size_t i = 0; i < cd.class_count(); ++i)
      for (std::size_t j = 0; j < cd.class_count(); ++j)
        for (std::size_t l = 0; l < cd.class_count(); ++l) {
          const Permutation target = group.elements[cd.reps[l]];
          std::int64_t count = 0;
          for (auto a : cd.members[i])
            for (auto b : cd.members[j]) count += (group.elements[a] * group.elements[b] == target);
          EXPECT_EQ(fusion.n(i, j, l), count) << g.name;
        }
  }
}

TEST(ClassFusion, MatricesCommuteAndSumRule) {
  for (const auto& g : fixtures::zoo()) {
    const auto group = fixtures::build(g);
    const auto cd = conjugacy_classes(group);
    const auto fusion = class_fusion(group, cd);
    EXPECT_TRUE(class_matrices_commute(fusion)) << g.name;
    for (std::size_t i = 0; i < cd.class_count(); ++i)
      for (std::size_t j = 0; j < cd.class_count(); ++j) {
        std::int64_t s = 0;
        for (std::size_t l = 0; l < cd.class_count(); ++l) s += fusion.n(i, j, l) * static_cast<std::int64_t>(cd.sizes[l]);
        EXPECT_EQ(s, static_cast<std::int64_t>(cd.sizes[i] * cd.sizes[j])) << g.name;
      }
  }
}

TEST(CharacterTable, SymmetricGroupS3ByClassIdentity) {
  const auto ga = analyze_group(fixtures::build(fixtures::s3()));
  const auto& cd = ga.classes;
  auto class_of = [&](const Permutation& p) { return cd.class_of[ga.group.index_of(p)]; };
  const std::size_t e = class_of(Permutation{{0, 1, 2}});
  const std::size_t tr = class_of(Permutation{{1, 0, 2}});
  const std::size_t cyc = class_of(Permutation{{1, 2, 0}});
  EXPECT_EQ(cd.sizes[tr], 3u);
  EXPECT_EQ(cd.sizes[cyc], 2u);

  const auto& ct = ga.characters;
  ASSERT_EQ(ct.size(), 3u);
  EXPECT_EQ(ct.dims, (std::vector<int>{1, 1, 2}));
  const double expected[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};  // at e, transposition, 3-cycle
  for (std::size_t l = 0; l < 3; ++l) {
    EXPECT_NEAR(std::abs(ct.chi(l, e) - expected[l][0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ct.chi(l, tr) - expected[l][1]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ct.chi(l, cyc) - expected[l][2]), 0.0, 1e-12);
  }
  EXPECT_NEAR(ct.s_matrix(0, e).real(), 1.0 / std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(ct.s_matrix(0, tr).real(), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(ct.s_matrix(0, cyc).real(), 1.0 / std::sqrt(3.0), 1e-12);
}

TEST(CharacterTable, CyclicGroupIsDiscreteFourier) {
  const auto ga = analyze_group(fixtures::build(fixtures::z4()));
  const auto& ct = ga.characters;
  ASSERT_EQ(ct.size(), 4u);
  // rows must be the four characters k -> i^{mk} in some order; trivial first
  const Permutation r{{1, 2, 3, 0}};
  std::set<int> found;
  for (std::size_t l = 0; l < 4; ++l) {
    int match = -1;
    for (int m = 0; m < 4; ++m) {
      bool ok = true;
      for (std::size_t j = 0; j < 4; ++j) {
        const Permutation& g = ga.group.elements[ga.classes.reps[j]];
        int k = 0;
        for (Permutation p = Permutation::identity(4); p != g; p = p * r) ++k;
        ok &= std::abs(ct.chi(l, j) - std::polar(1.0, std::numbers::pi / 2 * m * k)) < 1e-12;
      }
      if (ok) match = m;
    }
    ASSERT_GE(match, 0);
    found.insert(match);
    if (l == 0) {
      EXPECT_EQ(match, 0);
    }
  }
  EXPECT_EQ(found.size(), 4u);
  EXPECT_NEAR(max_abs(ct.s_matrix.cwiseAbs() - MatrixR::Constant(4, 4, 0.5)), 0.0, 1e-12);
}

TEST(CharacterTable, OrthogonalityUnitarityAndDimensions) {
  for (const auto& g : fixtures::zoo()) {
    const auto ga = analyze_group(fixtures::build(g));
    const auto& ct = ga.characters;
    const std::size_t r = ct.size();
    ASSERT_EQ(r, ga.classes.class_count()) << g.name;
    int sum_sq = 0;
    for (std::size_t k = 0; k < r; ++k) {
      sum_sq += ct.dims[k] * ct.dims[k];
      for (std::size_t l = 0; l < r; ++l) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < r; ++j) acc += static_cast<double>(ct.class_sizes[j]) * ct.chi(k, j) * std::conj(ct.chi(l, j));
        EXPECT_LT(std::abs(acc / static_cast<double>(g.order) - (k == l ? 1.0 : 0.0)), 1e-9) << g.name;
      }
    }
    EXPECT_EQ(sum_sq, static_cast<int>(g.order)) << g.name;
    EXPECT_LT(max_abs(ct.s_matrix * ct.s_matrix.adjoint() - MatrixC::Identity(r, r)), 1e-9) << g.name;
    // trivial row first, then nondecreasing dimension
    for (std::size_t j = 0; j < r; ++j) EXPECT_NEAR(std::abs(ct.chi(0, j) - 1.0), 0.0, 1e-12);
    EXPECT_TRUE(std::is_sorted(ct.dims.begin() + 1, ct.dims.end())) << g.name;
    EXPECT_EQ(regular_rep_multiplicities(ct), ct.dims) << g.name;
  }
}

TEST(CharacterTable, CentralValuesDiagonalizeClassMatrices) {
  for (const auto& g : fixtures::zoo()) {
    const auto ga = analyze_group(fixtures::build(g));
    const auto& ct = ga.characters;
    const std::size_t r = ct.size();
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          cplx rhs = 0.0;
          for (std::size_t c = 0; c < r; ++c) rhs += static_cast<double>(ga.fusion.n(i, j, c)) * ct.central_values(k, c);
          EXPECT_LT(std::abs(ct.central_values(k, i) * ct.central_values(k, j) - rhs), 1e-9) << g.name;
        }
  }
}

TEST(CharacterTable, Deterministic) {
  const auto a = analyze_group(fixtures::build(fixtures::s4())).characters;
  const auto b = analyze_group(fixtures::build(fixtures::s4())).characters;
  EXPECT_EQ(a.dims, b.dims);
  EXPECT_EQ(max_abs(a.chi - b.chi), 0.0);
}

TEST(RepFusion, TensorProductMultiplicities) {
  const auto ga = analyze_group(fixtures::build(fixtures::s3()));
  const auto rf = rep_fusion(ga.characters);
  // 2 x 2 = 1 + sign + 2
  EXPECT_EQ(rf.ntilde(2, 2, 0), 1);
  EXPECT_EQ(rf.ntilde(2, 2, 1), 1);
  EXPECT_EQ(rf.ntilde(2, 2, 2), 1);
  EXPECT_EQ(rf.ntilde(1, 1, 0), 1);
  for (const auto& g : fixtures::zoo()) {
    const auto ga2 = analyze_group(fixtures::build(g));
    const auto rf2 = rep_fusion(ga2.characters);
    const auto& d = ga2.characters.dims;
    for (std::size_t k = 0; k < d.size(); ++k)
      for (std::size_t l = 0; l < d.size(); ++l) {
        std::int64_t s = 0;
        for (std::size_t m = 0; m < d.size(); ++m) s += rf2.ntilde(k, l, m) * d[m];
        EXPECT_EQ(s, d[k] * d[l]) << g.name;
      }
  }
}

TEST(SRelations, ResidualsSmall) {
  for (const auto& g : fixtures::zoo()) {
    const auto ga = analyze_group(fixtures::build(g));
    const auto rep = verify_s_relations(ga.characters, ga.fusion, rep_fusion(ga.characters));
    EXPECT_LT(rep.max(), 1e-9) << g.name;
  }
}

TEST(SRelations, TamperedFusionIsDetected) {
  auto ga = analyze_group(fixtures::build(fixtures::s3()));
  auto rf = rep_fusion(ga.characters);
  rf.ntilde(2, 2, 2) += 1;
  EXPECT_GT(verify_s_relations(ga.characters, ga.fusion, rf).rep_residual, 0.1);
}

TEST(Centralizer, OrdersAreClassIndices) {
  for (const auto& g : fixtures::zoo()) {
    const auto group = fixtures::build(g);
    const auto cd = conjugacy_classes(group);
    for (std::size_t i = 0; i < cd.class_count(); ++i) {
      const auto c = centralizer(group, cd.reps[i]);
      EXPECT_EQ(c.order() * cd.sizes[i], group.order()) << g.name;
      for (const auto& h : c.elements) EXPECT_EQ(h * group.elements[cd.reps[i]], group.elements[cd.reps[i]] * h);
    }
  }
}
