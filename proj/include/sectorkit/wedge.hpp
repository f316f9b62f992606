#pragma once

// One-particle wedge localization for the massive scalar in 1+1 dimensions:
// rapidity grids, wedge test-function transforms and the operators j, delta^{it}, s.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace sectorkit {

struct RapidityGrid {
  double theta_max = 6.0;
  std::size_t points = 481;
  double mass = 1.0;

  double theta_min() const noexcept { return -theta_max; }
  double spacing() const noexcept { return 2.0 * theta_max / static_cast<double>(points - 1); }
  double theta(std::size_t k) const noexcept { return -theta_max + spacing() * static_cast<double>(k); }

  /// Trapezoid weights.
  double weight(std::size_t k) const noexcept {
    return (k == 0 || k + 1 == points) ? 0.5 * spacing() : spacing();
  }

  VectorR thetas() const {
    VectorR v(points);
    for (std::size_t k = 0; k < points; ++k) v(k) = theta(k);
    return v;
  }

  VectorR weights() const {
    VectorR v(points);
    for (std::size_t k = 0; k < points; ++k) v(k) = weight(k);
    return v;
  }
};

inline RapidityGrid make_grid(double theta_max = 6.0, std::size_t points = 481, double mass = 1.0) {
  if (points < 3) throw Error(ErrorKind::InvalidInput, "rapidity grid needs at least 3 points");
  if (!(theta_max > 0.0) || !(mass > 0.0)) throw Error(ErrorKind::InvalidInput, "grid extent and mass must be positive");
  return RapidityGrid{theta_max, points, mass};
}

// ---------------------------------------------------------------------------
// Test functions
// ---------------------------------------------------------------------------

enum class WedgeSide { Right, Left };

/// A exp(-r^2 / (2 sigma^2 (1 - r^2/R^2))) on the disk r < R around (t0, x0).
struct SpacetimeBump {
  double t0 = 0.0;
  double x0 = 2.0;
  double sigma = 0.3;
  double radius = 0.0;  // 0 means 4 sigma
  double amplitude = 1.0;

  double support_radius() const noexcept { return radius > 0.0 ? radius : 4.0 * sigma; }

  double operator()(double t, double x) const {
    const double R = support_radius();
    const double r2 = (t - t0) * (t - t0) + (x - x0) * (x - x0);
    if (r2 >= R * R) return 0.0;
    return amplitude * std::exp(-r2 / (2.0 * sigma * sigma * (1.0 - r2 / (R * R))));
  }

  /// Image under the reflection x -> -x.
  SpacetimeBump mirrored() const {
    SpacetimeBump b = *this;
    b.x0 = -x0;
    return b;
  }

  bool inside(WedgeSide side) const {
    const double X = side == WedgeSide::Right ? x0 : -x0;
    return X - std::abs(t0) >= std::numbers::sqrt2 * support_radius() - 1e-12;
  }
};

/// f^(z) = int f(t, x) exp(i m (x sinh z - t cosh z)) dt dx by the 2D
/// trapezoid rule on the bounding box of the support; entire in z.
class WedgeTransform {
 public:
  WedgeTransform(const SpacetimeBump& f, double mass, std::size_t nodes = 160) : mass_(mass) {
    const double R = f.support_radius();
    ts_.resize(nodes);
    xs_.resize(nodes);
    const double h = 2.0 * R / static_cast<double>(nodes - 1);
    for (std::size_t i = 0; i < nodes; ++i) {
      ts_[i] = f.t0 - R + h * static_cast<double>(i);
      xs_[i] = f.x0 - R + h * static_cast<double>(i);
    }
    weights_ = MatrixR(nodes, nodes);
    l1_ = 0.0;
    for (std::size_t i = 0; i < nodes; ++i)
      for (std::size_t j = 0; j < nodes; ++j) {
        weights_(i, j) = f(ts_[i], xs_[j]) * h * h;
        l1_ += std::abs(weights_(i, j));
      }
  }

  cplx operator()(cplx z) const {
    const cplx ik_x = cplx(0.0, mass_) * std::sinh(z);
    const cplx ik_t = cplx(0.0, -mass_) * std::cosh(z);
    const std::size_t n = ts_.size();
    VectorC ex(n);
    for (std::size_t j = 0; j < n; ++j) ex(j) = std::exp(ik_x * xs_[j]);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += weights_(i, j) * ex(j);
      acc += std::exp(ik_t * ts_[i]) * row;
    }
    return acc;
  }

  /// int |f|, the bound on |f^| throughout the strip.
  double l1_norm() const noexcept { return l1_; }

 private:
  double mass_;
  std::vector<double> ts_, xs_;
  MatrixR weights_;
  double l1_ = 0.0;
};

// ---------------------------------------------------------------------------
// One-particle waves and the pre-modular operators
// ---------------------------------------------------------------------------

struct OneParticleWave {
  RapidityGrid grid;
  VectorC values;
  std::function<cplx(cplx)> source;  // analytic continuation, when known

  bool has_source() const { return static_cast<bool>(source); }

  double norm() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < grid.points; ++k) acc += grid.weight(k) * std::norm(values(k));
    return std::sqrt(acc);
  }
};

/// (phi, psi) = int conj(phi) psi dtheta on the grid.
inline cplx wave_inner(const OneParticleWave& a, const OneParticleWave& b) {
  if (a.grid.points != b.grid.points || a.grid.theta_max != b.grid.theta_max)
    throw Error(ErrorKind::ShapeMismatch, "waves live on different grids");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < a.grid.points; ++k) acc += a.grid.weight(k) * std::conj(a.values(k)) * b.values(k);
  return acc;
}

inline OneParticleWave wave_from_values(const RapidityGrid& grid, VectorC values) {
  if (static_cast<std::size_t>(values.size()) != grid.points)
    throw Error(ErrorKind::ShapeMismatch, "wave length does not match the grid");
  return {grid, std::move(values), {}};
}

inline OneParticleWave wave_from_source(const RapidityGrid& grid, std::function<cplx(cplx)> source) {
  OneParticleWave w{grid, VectorC(grid.points), std::move(source)};
  for (std::size_t k = 0; k < grid.points; ++k) w.values(k) = w.source(cplx(grid.theta(k), 0.0));
  return w;
}

/// Transform of a wedge-supported test function.
inline OneParticleWave wedge_wave(const SpacetimeBump& f, const RapidityGrid& grid, WedgeSide side = WedgeSide::Right,
                                  std::size_t nodes = 160) {
  if (f.amplitude != 0.0 && !f.inside(side))
    throw Error(ErrorKind::SupportViolation, "test function support leaves the wedge");
  auto tr = std::make_shared<WedgeTransform>(f, grid.mass, nodes);
  return wave_from_source(grid, [tr](cplx z) { return (*tr)(z); });
}

namespace detail {

inline cplx interpolate(const OneParticleWave& w, double theta) {
  const auto& g = w.grid;
  const double pos = (theta - g.theta_min()) / g.spacing();
  if (pos < -1e-12 || pos > static_cast<double>(g.points - 1) + 1e-12) {
    const double scale = w.values.cwiseAbs().maxCoeff();
    const double edge = std::max(std::abs(w.values(0)), std::abs(w.values(g.points - 1)));
    if (edge > 1e-12 * std::max(scale, 1e-300))
      throw Error(ErrorKind::InterpolationOutOfRange, "shifted rapidity leaves the grid where the wave is not negligible");
    return 0.0;
  }
  const double clamped = std::clamp(pos, 0.0, static_cast<double>(g.points - 1));
  const auto k = std::min(static_cast<std::size_t>(clamped), g.points - 2);
  const double frac = clamped - static_cast<double>(k);
  return (1.0 - frac) * w.values(k) + frac * w.values(k + 1);
}

}  // namespace detail

/// (j phi)(theta) = conj(phi(theta)).
inline OneParticleWave apply_j(const OneParticleWave& w) {
  OneParticleWave out{w.grid, w.values.conjugate(), {}};
  if (w.has_source()) {
    auto src = w.source;
    out.source = [src](cplx z) { return std::conj(src(std::conj(z))); };
  }
  return out;
}

/// (delta^{it} phi)(theta) = phi(theta - 2 pi t) for complex t. Uses the
/// analytic source when present, grid interpolation otherwise (real t only).
inline OneParticleWave apply_delta(const OneParticleWave& w, cplx t) {
  const cplx shift = 2.0 * std::numbers::pi * t;
  if (w.has_source()) {
    auto src = w.source;
    return wave_from_source(w.grid, [src, shift](cplx z) { return src(z - shift); });
  }
  if (t.imag() != 0.0)
    throw Error(ErrorKind::MissingAnalyticSource, "imaginary boost parameter needs an analytic wave");
  OneParticleWave out{w.grid, VectorC(w.grid.points), {}};
  for (std::size_t k = 0; k < w.grid.points; ++k) out.values(k) = detail::interpolate(w, w.grid.theta(k) - shift.real());
  return out;
}

/// s = j delta^{1/2}: (s phi)(theta) = conj(phi(theta + i pi)).
inline OneParticleWave apply_s(const OneParticleWave& w) {
  if (!w.has_source()) throw Error(ErrorKind::MissingAnalyticSource, "s needs the analytic continuation of the wave");
  return apply_j(apply_delta(w, cplx(0.0, -0.5)));
}

enum class PremodularKind { J, Delta, S };

struct PremodularOp {
  PremodularKind kind = PremodularKind::J;
  cplx t = 0.0;  // for Delta
};

inline OneParticleWave premodular_apply(const PremodularOp& op, const OneParticleWave& w) {
  switch (op.kind) {
    case PremodularKind::J: return apply_j(w);
    case PremodularKind::Delta: return apply_delta(w, op.t);
    case PremodularKind::S: return apply_s(w);
  }
  return w;
}

inline double max_abs_diff(const OneParticleWave& a, const OneParticleWave& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

/// max |s phi - phi| / max |phi| (0 for the zero wave).
inline double s_invariance_residual(const OneParticleWave& w) {
  const double scale = w.values.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return max_abs_diff(apply_s(w), w) / scale;
}

/// max over the grid and the sampled heights lambda in (0, pi) of |f^(theta + i lambda)| / int |f|.
inline double strip_bound_ratio(const SpacetimeBump& f, const RapidityGrid& grid, const std::vector<double>& lambdas,
                                std::size_t stride = 8) {
  const WedgeTransform tr(f, grid.mass);
  if (tr.l1_norm() == 0.0) return 0.0;
  double worst = 0.0;
  for (double lam : lambdas)
    for (std::size_t k = 0; k < grid.points; k += stride)
      worst = std::max(worst, std::abs(tr(cplx(grid.theta(k), lam))) / tr.l1_norm());
  return worst;
}

}  // namespace sectorkit
