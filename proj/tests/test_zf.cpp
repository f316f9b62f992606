#include <gtest/gtest.h>

#include <random>

#include <sectorkit/zf.hpp>

using namespace sectorkit;

namespace {

std::vector<SMatrixModel> physical_models() {
  return {SMatrixModel::free(), SMatrixModel::ising(), SMatrixModel::sinh_gordon(0.4)};
}

TruncatedFockState random_state(const std::vector<int>& sample, bool distinct, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  TruncatedFockState s;
  s.n_max = 5;
  for (const auto& t : basis_tuples(sample, 3, distinct)) s.add(t, cplx(g(rng), g(rng)));
  return s;
}

const std::vector<int> kSample{100, 200, 240, 300};

}  // namespace

TEST(ScatteringModels, Values) {
  EXPECT_EQ(SMatrixModel::free()(0.7), cplx(1.0));
  EXPECT_EQ(SMatrixModel::ising()(0.7), cplx(-1.0));
  const auto sg = SMatrixModel::sinh_gordon(0.4);
  EXPECT_NEAR(std::abs(sg(0.0) + 1.0), 0.0, 1e-15);
  EXPECT_TRUE(sg.hard_core());
  EXPECT_FALSE(SMatrixModel::free().hard_core());
  EXPECT_FALSE(sg.has_pole_in_strip());
  EXPECT_TRUE(SMatrixModel::sinh_gordon(-0.4).has_pole_in_strip());
}

TEST(ScatteringModels, UnitarityAndCrossing) {
  const auto grid = make_grid();
  for (const auto& m : physical_models()) {
    const auto [herm, mod] = unitarity_check(m, grid);
    EXPECT_LT(herm, 1e-12) << m.name();
    EXPECT_LT(mod, 1e-12) << m.name();
    EXPECT_LT(crossing_check(m, grid), 1e-12) << m.name();
  }
  const auto bad = SMatrixModel::deformed();
  EXPECT_GT(crossing_check(bad, grid), 1e-2);
  EXPECT_GT(unitarity_check(bad, grid).second, 1e-2);
}

TEST(ScatteringModels, PoleInStripRejected) {
  try {
    crossing_check(SMatrixModel::sinh_gordon(-0.4), make_grid());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleInStrip);
  }
}

TEST(FockSpace, BasisNormsAndHardCore) {
  const auto grid = make_grid(6.0, 481);
  const double w = grid.weight(10);
  EXPECT_NEAR(basis_norm_sq({10, 10}, grid), 2.0 / (w * w), 1e-9);
  const auto ising = SMatrixModel::ising();
  auto s = zf_create(10, TruncatedFockState::vacuum(), ising, grid);
  EXPECT_TRUE(zf_create(10, s, ising, grid).amplitudes.empty());
  const auto fr = SMatrixModel::free();
  auto two = zf_create(10, zf_create(10, TruncatedFockState::vacuum(), fr, grid), fr, grid);
  EXPECT_NEAR(fock_norm(two, grid) * fock_norm(two, grid), 2.0 / (w * w), 1e-9);
}

TEST(FockSpace, CapExceeded) {
  const auto grid = make_grid();
  auto s = TruncatedFockState::vacuum(1);
  s = zf_create(5, s, SMatrixModel::free(), grid);
  try {
    zf_create(6, s, SMatrixModel::free(), grid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FockCapExceeded);
  }
}

TEST(FockSpace, AnnihilatorIsAdjointOfCreator) {
  const auto grid = make_grid();
  std::mt19937_64 rng(3);
  for (const auto& m : physical_models()) {
    const auto phi = random_state(kSample, m.hard_core(), rng);
    const auto psi = random_state(kSample, m.hard_core(), rng);
    for (int k : kSample) {
      auto psi_cap = psi;
      for (auto it = psi_cap.amplitudes.begin(); it != psi_cap.amplitudes.end();)
        it = it->first.size() >= 3 ? psi_cap.amplitudes.erase(it) : std::next(it);
      const cplx lhs = fock_inner(phi, zf_create(k, psi_cap, m, grid), grid);
      const cplx rhs = fock_inner(zf_annihilate(k, phi, m, grid), psi_cap, grid);
      EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(lhs))) << m.name();
    }
  }
}

TEST(ZFRelations, ResidualsVanish) {
  const auto grid = make_grid();
  for (const auto& m : physical_models()) EXPECT_LT(zf_relations_check(m, grid, kSample).max(), 1e-10) << m.name();
}

TEST(ZFRelations, InsertionOrderPhase) {
  // Z*(b) Z*(a) Omega with theta_a < theta_b picks up S(theta_b - theta_a)
  const auto grid = make_grid();
  const auto sg = SMatrixModel::sinh_gordon(0.4);
  const int a = 200, b = 300;
  const auto s = zf_create(b, zf_create(a, TruncatedFockState::vacuum(), sg, grid), sg, grid);
  EXPECT_NEAR(std::abs(s.amplitude({b, a}) - 1.0), 0.0, 1e-15);
  const auto r = zf_create(a, zf_create(b, TruncatedFockState::vacuum(), sg, grid), sg, grid);
  EXPECT_NEAR(std::abs(r.amplitude({b, a}) - sg(grid.theta(a) - grid.theta(b))), 0.0, 1e-15);
}

TEST(ZFRelations, NumberBound) {
  const auto grid = make_grid(6.0, 121);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  VectorC f(grid.points);
  for (std::size_t k = 0; k < grid.points; ++k) f(k) = std::exp(-grid.theta(k) * grid.theta(k)) * cplx(g(rng), g(rng));
  for (const auto& m : physical_models()) {
    auto psi = zf_create(60, TruncatedFockState::vacuum(), m, grid);
    psi = zf_create(30, psi, m, grid);
    EXPECT_LE(number_bound_ratio(f, psi, m, grid), 1.0 + 1e-12) << m.name();
  }
}

TEST(ScatteringConjugation, AntiunitaryInvolution) {
  const auto grid = make_grid();
  for (const auto& m : physical_models()) {
    const auto r = scattering_conjugation_check(m, grid, kSample, 3);
    EXPECT_LT(r.involution, 1e-10) << m.name();
    EXPECT_LT(r.antiunitarity, 1e-10) << m.name();
  }
  EXPECT_EQ(scattering_conjugation_check(SMatrixModel::free(), grid, kSample, 3).deviation_from_free, 0.0);
  EXPECT_GT(scattering_conjugation_check(SMatrixModel::sinh_gordon(0.4), grid, kSample, 3).deviation_from_free, 1e-3);
}

TEST(Kms, FourPointIdentity) {
  const auto grid = make_grid();
  const auto f = default_kms_bumps();
  for (const auto& m : physical_models()) {
    const auto r = kms_fourpoint_check(m, grid, f[0], f[1], f[2], f[3]);
    EXPECT_LT(r.residual, 1e-6) << m.name();
    EXPECT_GT(std::abs(r.direct), 1e-3) << m.name();
  }
  EXPECT_GT(kms_fourpoint_check(SMatrixModel::deformed(), grid, f[0], f[1], f[2], f[3]).residual, 1e-2);
}

TEST(Kms, FreeTwoPointCrossCheck) {
  // for S = 1 the direct value is <f1', f2'><f2, f1>... plus pairings; check it against explicit contractions
  const auto grid = make_grid();
  const auto f = default_kms_bumps();
  auto wave = [&](const SpacetimeBump& b) { return wedge_wave(b, grid).values; };
  const VectorC h1 = wave(f[0]), h2 = wave(f[1]), h1p = wave(f[2]), h2p = wave(f[3]);
  auto ip = [&](const VectorC& a, const VectorC& b) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < grid.points; ++k) acc += grid.weight(k) * std::conj(a(k)) * b(k);
    return acc;
  };
  // <Omega, F(1') F(2') F(2) F(1) Omega> with F(f) = a*(f) + a(f): Wick pairings
  const cplx oracle = ip(h1p, h2p) * ip(h2, h1) + ip(h1p, h2) * ip(h2p, h1) + ip(h1p, h1) * ip(h2p, h2);
  const auto r = kms_fourpoint_check(SMatrixModel::free(), grid, f[0], f[1], f[2], f[3]);
  EXPECT_LT(std::abs(r.direct - oracle), 1e-10 * std::abs(oracle));
}

TEST(Kms, RejectsOutsideWedge) {
  const auto f = default_kms_bumps();
  EXPECT_THROW(kms_fourpoint_check(SMatrixModel::free(), make_grid(), SpacetimeBump{0.0, 0.5, 0.3}, f[1], f[2], f[3]),
               Error);
}
