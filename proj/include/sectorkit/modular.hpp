#pragma once

// Modular data (S, T) of a rational sector theory: Verlinde fusion, the
// modular-group relations, nondegeneracy and the central-charge phase.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace sectorkit {

struct ModularData {
  std::vector<std::string> labels;
  MatrixC S;
  std::vector<cplx> kappa;         // kappa_rho, |kappa_rho| = 1
  std::vector<double> qdims;       // d_rho = S_{0 rho} / S_{00}
  std::vector<std::size_t> conj;   // rho -> rho-bar

  std::size_t size() const noexcept { return labels.size(); }

  /// Gauss sum  sum_rho kappa_rho d_rho^2.
  cplx gauss_sum() const {
    cplx g = 0.0;
    for (std::size_t r = 0; r < size(); ++r) g += kappa[r] * qdims[r] * qdims[r];
    return g;
  }

  /// Cube root of the Gauss phase on the branch nearest arg/3.
  cplx global_kappa() const {
    const cplx g = gauss_sum();
    if (std::abs(g) < 1e-12) return 1.0;
    return std::polar(1.0, std::arg(g) / 3.0);
  }

  /// T = kappa^{-1} diag(kappa_rho).
  MatrixC T() const {
    const cplx k = global_kappa();
    MatrixC t = MatrixC::Zero(size(), size());
    for (std::size_t r = 0; r < size(); ++r) t(r, r) = kappa[r] / k;
    return t;
  }

  MatrixC C() const {
    MatrixC c = MatrixC::Zero(size(), size());
    for (std::size_t r = 0; r < size(); ++r) c(r, conj[r]) = 1.0;
    return c;
  }
};

/// Builds modular data from labels, S and the phases kappa; quantum
/// dimensions and charge conjugation are derived from S.
inline ModularData make_modular_data(std::vector<std::string> labels, MatrixC S, std::vector<cplx> kappa) {
  const std::size_t n = labels.size();
  if (S.rows() != static_cast<Eigen::Index>(n) || S.cols() != static_cast<Eigen::Index>(n) || kappa.size() != n)
    throw Error(ErrorKind::ShapeMismatch, "labels, S and kappa must agree in size");
  if (n == 0) throw Error(ErrorKind::InvalidInput, "modular data needs at least the vacuum sector");
  for (std::size_t r = 0; r < n; ++r) {
    if (std::abs(std::abs(kappa[r]) - 1.0) > 1e-9)
      throw Error(ErrorKind::InvalidInput, "kappa phases must have unit modulus");
    const cplx s0 = S(0, r);
    if (s0.real() <= 1e-14 || std::abs(s0.imag()) > 1e-9)
      throw Error(ErrorKind::SingularVacuumRow, "vacuum row of S must be strictly positive");
  }
  ModularData md;
  md.labels = std::move(labels);
  md.kappa = std::move(kappa);
  md.qdims.resize(n);
  for (std::size_t r = 0; r < n; ++r) md.qdims[r] = S(0, r).real() / S(0, 0).real();
  md.conj.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    double best = 1e300;
    for (std::size_t s = 0; s < n; ++s) {
      const double dist = (S.row(s) - S.row(r).conjugate()).cwiseAbs().maxCoeff();
      if (dist < best) {
        best = dist;
        md.conj[r] = s;
      }
    }
  }
  md.S = std::move(S);
  return md;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

inline ModularData trivial_modular_data() {
  MatrixC s(1, 1);
  s(0, 0) = 1.0;
  return make_modular_data({"1"}, s, {1.0});
}

/// Z2 double in the order (e,+), (e,-), (g,+), (g,-).
inline ModularData toric_code() {
  MatrixC s(4, 4);
  s << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
  s *= 0.5;
  return make_modular_data({"1", "e", "m", "f"}, s, {1.0, 1.0, 1.0, -1.0});
}

inline ModularData fibonacci() {
  const double phi = 2.0 * std::cos(std::numbers::pi / 5.0);
  MatrixC s(2, 2);
  s << 1, phi, phi, -1;
  s /= std::sqrt(2.0 + phi);
  return make_modular_data({"1", "tau"}, s, {1.0, std::polar(1.0, 4.0 * std::numbers::pi / 5.0)});
}

inline ModularData semion() {
  MatrixC s(2, 2);
  s << 1, 1, 1, -1;
  s /= std::sqrt(2.0);
  return make_modular_data({"1", "s"}, s, {1.0, cplx(0.0, 1.0)});
}

// ---------------------------------------------------------------------------
// Verlinde fusion
// ---------------------------------------------------------------------------

struct FusionOutput {
  Tensor3 N;  // N(rho, sigma, mu)

  std::size_t rank() const noexcept { return N.rank(); }

  /// (N_rho)_{sigma, mu}
  MatrixR matrix(std::size_t rho) const {
    MatrixR m(rank(), rank());
    for (std::size_t s = 0; s < rank(); ++s)
      for (std::size_t u = 0; u < rank(); ++u) m(s, u) = static_cast<double>(N(rho, s, u));
    return m;
  }
};

inline FusionOutput verlinde_fusion(const ModularData& md, double tolerance = 1e-8) {
  const std::size_t n = md.size();
  const double unitarity = max_abs(md.S * md.S.adjoint() - MatrixC::Identity(n, n));
  if (unitarity > tolerance)
    throw Error(ErrorKind::NonUnitaryS, "S deviates from unitarity by " + std::to_string(unitarity));
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(md.S(0, j)) < 1e-14) throw Error(ErrorKind::SingularVacuumRow, "S_0j vanishes");
  FusionOutput out{Tensor3(n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t m = 0; m < n; ++m) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += md.S(r, j) * md.S(s, j) * std::conj(md.S(m, j)) / md.S(0, j);
        const double rounded = std::round(acc.real());
        if (std::abs(acc - rounded) > tolerance || rounded < 0)
          throw Error(ErrorKind::NonIntegralFusion, "Verlinde coefficient " + md.labels[r] + "x" + md.labels[s] + "->" +
                                                        md.labels[m] + " is not a nonnegative integer");
        out.N(r, s, m) = static_cast<std::int64_t>(rounded);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

struct ModularReport {
  double s_unitarity = 0.0;
  double t_unitarity = 0.0;
  double tstst = 0.0;
  double s_squared_c = 0.0;
  double tc_ct = 0.0;

  double max() const { return std::max({s_unitarity, t_unitarity, tstst, s_squared_c, tc_ct}); }
};

inline ModularReport check_modular_relations(const ModularData& md) {
  const std::size_t n = md.size();
  const MatrixC id = MatrixC::Identity(n, n);
  const MatrixC t = md.T();
  const MatrixC c = md.C();
  ModularReport r;
  r.s_unitarity = max_abs(md.S * md.S.adjoint() - id);
  r.t_unitarity = max_abs(t * t.adjoint() - id);
  r.tstst = max_abs(t * md.S * t * md.S * t - md.S);
  r.s_squared_c = max_abs(md.S * md.S - c);
  r.tc_ct = max_abs(t * c - c * t);
  return r;
}

struct NondegeneracyResult {
  double gauss_modulus_sq = 0.0;  // |sum kappa d^2|^2
  double dim_sum = 0.0;           // sum d^2
  bool nondegenerate = false;
};

inline NondegeneracyResult nondegeneracy_check(const ModularData& md, double tolerance = 1e-9) {
  NondegeneracyResult r;
  r.gauss_modulus_sq = std::norm(md.gauss_sum());
  for (double d : md.qdims) r.dim_sum += d * d;
  r.nondegenerate = std::abs(r.gauss_modulus_sq - r.dim_sum) <= tolerance * std::max(1.0, r.dim_sum);
  return r;
}

/// c mod 8 from exp(2 pi i c / 8) = Gauss phase.
inline double central_charge_mod8(const ModularData& md, double tolerance = 1e-9) {
  if (!nondegeneracy_check(md, tolerance).nondegenerate)
    throw Error(ErrorKind::DegenerateData, "central charge needs nondegenerate sectors");
  double c = std::fmod(8.0 * std::arg(md.gauss_sum()) / (2.0 * std::numbers::pi), 8.0);
  if (c < 0) c += 8.0;
  if (c > 8.0 - 1e-10 || c < 1e-10) c = 0.0;
  return c;
}

struct FusionAxiomsReport {
  bool vacuum_unit = true;
  bool commutative = true;
  bool associative = true;
  bool conjugation = true;
  std::int64_t associativity_violations = 0;

  bool ok() const { return vacuum_unit && commutative && associative && conjugation; }
};

inline FusionAxiomsReport fusion_algebra_axioms(const FusionOutput& f, const std::vector<std::size_t>& conj) {
  const std::size_t n = f.rank();
  if (conj.size() != n) throw Error(ErrorKind::ShapeMismatch, "conjugation has the wrong size");
  FusionAxiomsReport r;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (f.N(0, a, b) != (a == b ? 1 : 0)) r.vacuum_unit = false;
      if (f.N(a, b, 0) != (b == conj[a] ? 1 : 0)) r.conjugation = false;
      for (std::size_t m = 0; m < n; ++m)
        if (f.N(a, b, m) != f.N(b, a, m)) r.commutative = false;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < n; ++m) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += f.N(a, b, e) * f.N(e, c, m);
            rhs += f.N(b, c, e) * f.N(a, e, m);
          }
          if (lhs != rhs) ++r.associativity_violations;
        }
  r.associative = r.associativity_violations == 0;
  return r;
}

/// Largest eigenvalue modulus of the fusion matrix N_rho.
inline double perron_frobenius_dimension(const FusionOutput& f, std::size_t rho) {
  Eigen::EigenSolver<MatrixR> es(f.matrix(rho), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace sectorkit
