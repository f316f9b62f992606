#pragma once

// Markov-trace quantization of braid statistics: the positivity scan over
// (alpha, eta) and the closed-form (q, d) solution table.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "linalg.hpp"
#include "temperley_lieb.hpp"

namespace sectorkit {

struct StatisticsSolution {
  int q = 0;  // 0 encodes q = infinity
  int d = 0;
  double alpha = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double lambda_modulus = 0.0;
  cplx lambda_phase_rel = 1.0;
  double statistical_dimension = 0.0;
};

/// eta = sin((k+1) a) / (2 cos(a) sin(k a)); at a = 0 the limit (k+1)/(2k).
inline double eta_closed_form(int k, double alpha) {
  if (alpha == 0.0) return (k + 1.0) / (2.0 * k);
  return std::sin((k + 1) * alpha) / (2.0 * std::cos(alpha) * std::sin(k * alpha));
}

inline StatisticsSolution statistics_solution(int q, int d) {
  StatisticsSolution s;
  s.q = q;
  s.d = d;
  if (q == 0) {
    s.eta1 = eta_closed_form(d, 0.0);
    s.eta2 = 1.0 - s.eta1;
    s.lambda_modulus = 1.0 / d;
  } else {
    const double a = std::numbers::pi / q;
    s.alpha = a;
    s.eta1 = eta_closed_form(d, a);
    s.eta2 = eta_closed_form(q - d, a);
    s.lambda_modulus = std::sin(a) / std::sin(d * a);
    s.lambda_phase_rel = std::polar(1.0, a * (d + 1));
  }
  s.statistical_dimension = 1.0 / s.lambda_modulus;
  return s;
}

/// All (q, d) with 4 <= q <= q_max and 2 <= d <= q-2, followed by the
/// q = infinity family for 2 <= d <= q_max.
inline std::vector<StatisticsSolution> enumerate_statistics(int q_max) {
  std::vector<StatisticsSolution> out;
  for (int q = 4; q <= q_max; ++q)
    for (int d = 2; d <= q - 2; ++d) out.push_back(statistics_solution(q, d));
  for (int d = 2; d <= q_max; ++d) out.push_back(statistics_solution(0, d));
  return out;
}

// ---------------------------------------------------------------------------
// Positivity scan
// ---------------------------------------------------------------------------

enum class ScanStatus { Survived, Refuted, Inconclusive };

struct ScanPoint {
  double alpha = 0.0;
  double eta1 = 0.0;
  ScanStatus status = ScanStatus::Refuted;
  int survived_n = 0;  // level at which the trace of the projector vanished, or the last level checked
};

struct ScanOptions {
  double zero_tolerance = 1e-12;
};

/// Follows phi(E^{(n+1)}) = phi(E^{(n)}) (1 - c_n eta_j) for both spectral
/// channels j; no factor may turn negative before the channel's trace
/// vanishes. For alpha != 0 both channels must vanish before the cutoff level
/// q = min{n : n|alpha| >= pi}, where c_{q-1} diverges; for alpha = 0 one
/// vanishing channel suffices. Points whose cutoff lies beyond n_max, or
/// (alpha = 0) that neither vanish nor turn negative within n_max, are
/// inconclusive. eta1 in {0, 1} is excluded.
inline ScanPoint classify_point(double alpha, double eta1, int n_max, const ScanOptions& opts = {}) {
  ScanPoint pt{alpha, eta1, ScanStatus::Refuted, 0};
  const double tol = opts.zero_tolerance;
  if (eta1 <= tol || eta1 >= 1.0 - tol) return pt;

  int cutoff = 0;  // 0: none
  if (alpha != 0.0) {
    cutoff = static_cast<int>(std::ceil((std::numbers::pi - tol) / std::abs(alpha)));
    while (cutoff * std::abs(alpha) < std::numbers::pi - tol) ++cutoff;
    while ((cutoff - 1) * std::abs(alpha) >= std::numbers::pi - tol) --cutoff;
    if (cutoff - 1 > n_max) {
      pt.status = ScanStatus::Inconclusive;
      pt.survived_n = n_max;
      return pt;
    }
  }
  const int last = cutoff ? cutoff - 2 : n_max;

  const double etas[2] = {eta1, 1.0 - eta1};
  int first_zero = 0;
  int checked = 0;
  bool all_zero = true;
  for (double eta : etas) {
    int zero_at = 0;
    for (int n = 1; n <= last; ++n) {
      const double f = 1.0 - wenzl_coefficient(static_cast<std::size_t>(n), alpha) * eta;
      checked = std::max(checked, n);
      if (std::abs(f) <= tol) {
        zero_at = n;
        break;
      }
      if (f < -tol) return pt;
    }
    if (zero_at) {
      first_zero = first_zero ? std::min(first_zero, zero_at) : zero_at;
    } else {
      all_zero = false;
    }
  }
  pt.survived_n = first_zero ? first_zero : checked;
  if (cutoff == 0) {
    pt.status = first_zero ? ScanStatus::Survived : ScanStatus::Inconclusive;
  } else if (all_zero) {
    pt.status = ScanStatus::Survived;
  }
  return pt;
}

struct ScanResult {
  std::vector<ScanPoint> survivors;
  std::size_t refuted = 0;
  std::size_t inconclusive = 0;
};

inline ScanResult positivity_scan(const std::vector<double>& alpha_grid, const std::vector<double>& eta_grid,
                                  int n_max, const ScanOptions& opts = {}) {
  if (n_max < 1 || n_max > 200) throw Error(ErrorKind::InvalidInput, "n_max must lie in [1, 200]");
  ScanResult r;
  for (double a : alpha_grid) {
    for (double e : eta_grid) {
      const ScanPoint p = classify_point(a, e, n_max, opts);
      switch (p.status) {
        case ScanStatus::Survived: r.survivors.push_back(p); break;
        case ScanStatus::Refuted: ++r.refuted; break;
        case ScanStatus::Inconclusive: ++r.inconclusive; break;
      }
    }
  }
  return r;
}

/// Uniform grid lo, lo + step, ..., hi (inclusive up to rounding).
inline std::vector<double> uniform_grid(double lo, double hi, double step) {
  std::vector<double> g;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

}  // namespace sectorkit
