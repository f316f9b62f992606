#include <gtest/gtest.h>

#include <random>

#include <sectorkit/inclusions.hpp>

using namespace sectorkit;

namespace {

InclusionSpec baby() { return {{{{1, 1}}}, {{{2, 1}}}, {{2}}}; }

MatrixC random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixC m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(GnsRealization, TwoByTwoSwapMatchesTheHandMatrix) {
  const auto g = gns_realize(2);
  MatrixR expected(4, 4);
  expected << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  EXPECT_EQ(g.P, expected);
}

TEST(GnsRealization, ModularConjugationProperties) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const auto g = gns_realize(n);
    const MatrixC x = random_matrix(n, rng), y = random_matrix(n, rng), a = random_matrix(n, rng);
    const VectorC vx = g.vec(x), vy = g.vec(y);
    EXPECT_LT(max_abs(g.unvec(vx) - x), 1e-15);
    // J xi = xi*
    EXPECT_LT(max_abs(g.unvec(g.apply_J(vx)) - x.adjoint()), 1e-14);
    EXPECT_LT((g.apply_J(g.apply_J(vx)) - vx).cwiseAbs().maxCoeff(), 1e-14);
    // antiunitary: <J x, J y> = <y, x>
    EXPECT_LT(std::abs(g.inner(g.apply_J(vx), g.apply_J(vy)) - g.inner(vy, vx)), 1e-12);
    // J a J = right multiplication by a*
    EXPECT_LT(max_abs(g.conjugate_by_J(g.left_action(a)) - g.right_action(a.adjoint())), 1e-12);
    // left and right actions commute
    const MatrixC L = g.left_action(a), R = g.right_action(y);
    EXPECT_LT(max_abs(L * R - R * L), 1e-10);
    // the trace state: <1, a 1> = Tr(a)/n
    const VectorC one = g.vec(MatrixC::Identity(n, n));
    EXPECT_LT(std::abs(g.inner(one, L * one) - a.trace() / static_cast<double>(n)), 1e-12);
    EXPECT_NEAR(g.norm(one), 1.0, 1e-14);
  }
  EXPECT_EQ(kind_of([] { gns_realize(13); }), ErrorKind::SizeCap);
  EXPECT_EQ(kind_of([] { gns_realize(0); }), ErrorKind::SizeCap);
}

TEST(JonesIndexProjector, BabyInclusion) {
  const auto r = jones_index_projector(baby());
  EXPECT_EQ(r.index, Rational(4));
  EXPECT_EQ(r.tau_eB, Rational(1, 4));
  ASSERT_EQ(r.e_B.rows(), 4u);
  const Rational h(1, 2), z(0);
  const Rational expected[4][4] = {{h, z, z, h}, {z, z, z, z}, {z, z, z, z}, {h, z, z, h}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r.e_B(i, j), expected[i][j]) << i << "," << j;
}

TEST(JonesIndexProjector, ProjectorIsOntoTheSmallAlgebraVectors) {
  // e_B is the orthogonal projection onto B * vec(1); check against a Gram-Schmidt oracle
  const InclusionSpec inc{{{{2, 1}}}, {{{4, 1}}}, {{2}}};
  const auto r = jones_index_projector(inc);
  EXPECT_EQ(r.index, Rational(4));
  const auto g = gns_realize(4);
  std::vector<VectorC> span;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      MatrixC x = MatrixC::Zero(4, 4);
      x(i, j) = 1.0;
      x(i + 2, j + 2) = 1.0;
      span.push_back(g.vec(x));
    }
  MatrixC proj = MatrixC::Zero(16, 16);
  for (const auto& v : span) proj += v * v.adjoint() / v.squaredNorm();
  EXPECT_LT(max_abs(proj - r.e_B.to_double().cast<cplx>()), 1e-14);
}

TEST(JonesIndexProjector, AgreesWithIncidenceOnHomogeneousInclusions) {
  const std::vector<InclusionSpec> cases{
      baby(),
      {{{{2, 1}}}, {{{4, 1}}}, {{2}}},
      {{{{1, 1}}}, {{{3, 1}}}, {{3}}},
      {{{{1, 1}, {1, 1}}}, {{{2, 1}}}, {{1, 1}}},
      {{{{2, 1}, {2, 1}}}, {{{4, 1}}}, {{1, 1}}},
      {{{{1, 1}, {1, 1}, {1, 1}}}, {{{3, 1}}}, {{1, 1, 1}}},
  };
  for (const auto& inc : cases) {
    const auto p = jones_index_projector(inc);
    const auto q = jones_index_incidence(inc);
    EXPECT_EQ(p.index, Rational(q.index));
  }
}

TEST(JonesIndexProjector, Errors) {
  EXPECT_EQ(kind_of([] { jones_index_projector({{{{1, 1}}}, {{{2, 1}, {1, 1}}}, {{2}, {1}}}); }), ErrorKind::NotAFactor);
  EXPECT_EQ(kind_of([] { jones_index_projector({{{{1, 1}}}, {{{13, 1}}}, {{13}}}); }), ErrorKind::SizeCap);
  EXPECT_EQ(kind_of([] { jones_index_projector({{{{1, 1}}}, {{{3, 1}}}, {{2}}}); }), ErrorKind::InvalidInclusion);
  EXPECT_EQ(kind_of([] { jones_index_projector({{{{1, 1}}}, {{{2, 1}}}, {{2, 1}}}); }), ErrorKind::ShapeMismatch);
}

TEST(JonesIndexIncidence, KnownValues) {
  const auto a = jones_index_incidence(IntMatrix{{1, 1}, {1, 0}});
  EXPECT_EQ(a.index, 3);
  EXPECT_NEAR(a.opnorm_sq, (3.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_EQ(jones_index_incidence(IntMatrix{{2}}).index, 4);
  // Mat2 + C in Mat2 + Mat3
  const InclusionSpec inc{{{{2, 1}, {1, 1}}}, {{{2, 1}, {3, 1}}}, {{1, 0}, {1, 1}}};
  EXPECT_EQ(jones_index_incidence(inc).index, 3);
}

TEST(JonesIndexIncidence, OperatorNormOracle) {
  // 2x2 oracle: largest eigenvalue of L^T L from the quadratic formula
  const IntMatrix cases[] = {{{1, 1}, {1, 0}}, {{2, 1}, {0, 3}}, {{1, 2}, {3, 4}}};
  for (const auto& l : cases) {
    const double a = l[0][0], b = l[0][1], c = l[1][0], d = l[1][1];
    const double p = a * a + c * c, q = a * b + c * d, r = b * b + d * d;
    const double top = (p + r) / 2.0 + std::sqrt((p - r) * (p - r) / 4.0 + q * q);
    EXPECT_NEAR(jones_index_incidence(l).opnorm_sq, top, 1e-10);
    EXPECT_LE(jones_index_incidence(l).opnorm_sq, static_cast<double>(jones_index_incidence(l).index) + 1e-12);
  }
}

TEST(JonesIndexIncidence, RejectsBadMatrices) {
  EXPECT_EQ(kind_of([] { jones_index_incidence(IntMatrix{{1, 2}, {1}}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { jones_index_incidence(IntMatrix{{-1}}); }), ErrorKind::InvalidInclusion);
}

TEST(Bratteli, ComposedFactorTowersMultiply) {
  // C in Mat2 in Mat4 and C in Mat3 in Mat6: index of a factor tower is multiplicative
  for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{1, 5}}) {
    const IntMatrix l1{{a}}, l2{{b}};
    const auto c = bratteli_compose(l1, l2);
    EXPECT_EQ(jones_index_incidence(c).index, jones_index_incidence(l1).index * jones_index_incidence(l2).index);
  }
  const IntMatrix l1{{1, 1}, {1, 0}}, l2{{1, 0}, {0, 1}};
  EXPECT_EQ(bratteli_compose(l1, l2), l1);
  EXPECT_EQ(kind_of([&] { bratteli_compose(l1, IntMatrix{{1, 0}}); }), ErrorKind::ShapeMismatch);
}

TEST(RationalMatrix, ExactArithmetic) {
  RationalMatrix a(2, 2);
  a(0, 0) = Rational(1, 3);
  a(1, 1) = Rational(2, 3);
  a(0, 1) = Rational(1, 2);
  const auto sq = a * a;
  EXPECT_EQ(sq(0, 0), Rational(1, 9));
  EXPECT_EQ(sq(0, 1), Rational(1, 2));
  EXPECT_EQ(a.trace(), Rational(1));
  EXPECT_EQ(a.transpose()(1, 0), Rational(1, 2));
}
