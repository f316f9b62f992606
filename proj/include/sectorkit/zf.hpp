#pragma once

// Zamolodchikov-Faddeev operators on a truncated Fock space over a rapidity
// grid, crossing symmetry, the wedge KMS four-point identity and the
// scattering-deformed modular conjugation.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "wedge.hpp"

namespace sectorkit {

enum class ModelKind { Free, Ising, SinhGordon, Deformed };

/// Two-particle scattering function S(theta).
struct SMatrixModel {
  ModelKind kind = ModelKind::Free;
  double b = 0.4;       // sinh-Gordon coupling
  double kappa = 0.1;   // Deformed: S_sinh-Gordon(theta) exp(kappa theta)

  static SMatrixModel free() { return {ModelKind::Free}; }
  static SMatrixModel ising() { return {ModelKind::Ising}; }
  static SMatrixModel sinh_gordon(double b) { return {ModelKind::SinhGordon, b}; }
  static SMatrixModel deformed(double b = 0.4, double kappa = 0.1) { return {ModelKind::Deformed, b, kappa}; }

  std::string name() const {
    switch (kind) {
      case ModelKind::Free: return "free";
      case ModelKind::Ising: return "ising";
      case ModelKind::SinhGordon: return "sinh_gordon";
      case ModelKind::Deformed: return "deformed";
    }
    return "unknown";
  }

  cplx operator()(cplx theta) const {
    switch (kind) {
      case ModelKind::Free: return 1.0;
      case ModelKind::Ising: return -1.0;
      case ModelKind::SinhGordon: return sinh_gordon_value(theta);
      case ModelKind::Deformed: return sinh_gordon_value(theta) * std::exp(kappa * theta);
    }
    return 1.0;
  }

  /// Poles of (sinh z - i sin(pi b)) / (sinh z + i sin(pi b)) sit at
  /// Im z = -pi b and pi + pi b (mod 2 pi).
  bool has_pole_in_strip() const {
    if (kind == ModelKind::Free || kind == ModelKind::Ising) return false;
    const double two_pi = 2.0 * std::numbers::pi;
    for (double y : {-std::numbers::pi * b, std::numbers::pi + std::numbers::pi * b}) {
      double r = std::fmod(y, two_pi);
      if (r < 0) r += two_pi;
      if (r > 1e-12 && r < std::numbers::pi - 1e-12) return true;
    }
    return false;
  }

  /// S(0) = -1 forces at most one particle per rapidity.
  bool hard_core() const { return std::abs((*this)(0.0) + 1.0) < 1e-12; }

 private:
  cplx sinh_gordon_value(cplx theta) const {
    const cplx i_s(0.0, std::sin(std::numbers::pi * b));
    const cplx sh = std::sinh(theta);
    return (sh - i_s) / (sh + i_s);
  }
};

inline void require_pole_free(const SMatrixModel& m) {
  if (m.has_pole_in_strip())
    throw Error(ErrorKind::PoleInStrip, "scattering function has a pole in the physical strip");
}

// ---------------------------------------------------------------------------
// Truncated Fock space
// ---------------------------------------------------------------------------

using Tuple = std::vector<int>;  // grid indices, non-increasing

/// psi = sum_t c_t a*(theta_t1) ... a*(theta_tn) Omega over rapidity-ordered tuples.
struct TruncatedFockState {
  std::size_t n_max = 4;
  std::map<Tuple, cplx> amplitudes;

  static TruncatedFockState vacuum(std::size_t n_max = 4) {
    TruncatedFockState s;
    s.n_max = n_max;
    s.amplitudes[{}] = 1.0;
    return s;
  }

  void add(const Tuple& t, cplx c) {
    if (c == cplx(0.0)) return;
    amplitudes[t] += c;
  }

  cplx amplitude(const Tuple& t) const {
    auto it = amplitudes.find(t);
    return it == amplitudes.end() ? cplx(0.0) : it->second;
  }

  TruncatedFockState& operator+=(const TruncatedFockState& o) {
    for (const auto& [t, c] : o.amplitudes) add(t, c);
    return *this;
  }
  TruncatedFockState& operator*=(cplx s) {
    for (auto& [t, c] : amplitudes) c *= s;
    return *this;
  }
  friend TruncatedFockState operator+(TruncatedFockState a, const TruncatedFockState& b) { return a += b; }
  friend TruncatedFockState operator-(TruncatedFockState a, TruncatedFockState b) { return a += (b *= -1.0); }
  friend TruncatedFockState operator*(cplx s, TruncatedFockState a) { return a *= s; }
};

/// <t|t> = prod_k m_k! / w_k^{m_k}.
inline double basis_norm_sq(const Tuple& t, const RapidityGrid& grid) {
  double n = 1.0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    const double w = grid.weight(static_cast<std::size_t>(t[i]));
    for (std::size_t m = 1; m <= j - i; ++m) n *= static_cast<double>(m) / w;
    i = j;
  }
  return n;
}

inline cplx fock_inner(const TruncatedFockState& a, const TruncatedFockState& b, const RapidityGrid& grid) {
  cplx acc = 0.0;
  for (const auto& [t, c] : a.amplitudes) {
    auto it = b.amplitudes.find(t);
    if (it != b.amplitudes.end()) acc += std::conj(c) * it->second * basis_norm_sq(t, grid);
  }
  return acc;
}

inline double fock_norm(const TruncatedFockState& a, const RapidityGrid& grid) {
  return std::sqrt(fock_inner(a, a, grid).real());
}

/// Z*(theta_k): inserts k at its ordered position, picking up S(theta_k - theta_l)
/// for every strictly larger rapidity it passes.
inline TruncatedFockState zf_create(int k, const TruncatedFockState& psi, const SMatrixModel& model,
                                    const RapidityGrid& grid) {
  if (k < 0 || static_cast<std::size_t>(k) >= grid.points) throw Error(ErrorKind::IndexOutOfRange, "rapidity index");
  TruncatedFockState out;
  out.n_max = psi.n_max;
  const bool hard = model.hard_core();
  const double th = grid.theta(static_cast<std::size_t>(k));
  for (const auto& [t, c] : psi.amplitudes) {
    if (c == cplx(0.0)) continue;
    if (t.size() >= psi.n_max) throw Error(ErrorKind::FockCapExceeded, "particle number would exceed n_max");
    if (hard && std::find(t.begin(), t.end(), k) != t.end()) continue;
    cplx factor = 1.0;
    Tuple nt;
    nt.reserve(t.size() + 1);
    bool placed = false;
    for (int l : t) {
      if (!placed && l <= k) {
        nt.push_back(k);
        placed = true;
      }
      if (l > k) factor *= model(th - grid.theta(static_cast<std::size_t>(l)));
      nt.push_back(l);
    }
    if (!placed) nt.push_back(k);
    out.add(nt, c * factor);
  }
  return out;
}

/// Z(theta_k): removes one k with weight m_k / w_k and conj S(theta_k - theta_l)
/// for every strictly larger rapidity.
inline TruncatedFockState zf_annihilate(int k, const TruncatedFockState& psi, const SMatrixModel& model,
                                        const RapidityGrid& grid) {
  if (k < 0 || static_cast<std::size_t>(k) >= grid.points) throw Error(ErrorKind::IndexOutOfRange, "rapidity index");
  TruncatedFockState out;
  out.n_max = psi.n_max;
  const double th = grid.theta(static_cast<std::size_t>(k));
  const double w = grid.weight(static_cast<std::size_t>(k));
  for (const auto& [t, c] : psi.amplitudes) {
    const auto mult = std::count(t.begin(), t.end(), k);
    if (mult == 0 || c == cplx(0.0)) continue;
    cplx factor = static_cast<double>(mult) / w;
    Tuple nt;
    bool removed = false;
    for (int l : t) {
      if (l > k) factor *= std::conj(model(th - grid.theta(static_cast<std::size_t>(l))));
      if (l == k && !removed) {
        removed = true;
        continue;
      }
      nt.push_back(l);
    }
    out.add(nt, c * factor);
  }
  return out;
}

/// Z*(f) = sum_k w_k f_k Z*(theta_k).
inline TruncatedFockState zf_create_smeared(const VectorC& f, const TruncatedFockState& psi, const SMatrixModel& model,
                                            const RapidityGrid& grid) {
  TruncatedFockState out;
  out.n_max = psi.n_max;
  for (std::size_t k = 0; k < grid.points; ++k)
    if (f(k) != cplx(0.0)) out += (grid.weight(k) * f(k)) * zf_create(static_cast<int>(k), psi, model, grid);
  return out;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

namespace detail {

inline void enumerate_tuples(const std::vector<int>& idx, std::size_t max_len, bool distinct, Tuple& cur,
                             std::size_t start, std::vector<Tuple>& out) {
  out.push_back(cur);
  if (cur.size() == max_len) return;
  for (std::size_t i = start; i < idx.size(); ++i) {
    cur.push_back(idx[i]);
    enumerate_tuples(idx, max_len, distinct, cur, distinct ? i + 1 : i, out);
    cur.pop_back();
  }
}

inline double state_distance(const TruncatedFockState& a, const TruncatedFockState& b) {
  double m = 0.0;
  for (const auto& [t, c] : a.amplitudes) m = std::max(m, std::abs(c - b.amplitude(t)));
  for (const auto& [t, c] : b.amplitudes) m = std::max(m, std::abs(c - a.amplitude(t)));
  return m;
}

}  // namespace detail

/// All rapidity-ordered tuples of length <= max_len over the given indices
/// (descending); distinct entries for hard-core models.
inline std::vector<Tuple> basis_tuples(std::vector<int> indices, std::size_t max_len, bool distinct) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  std::vector<Tuple> out;
  Tuple cur;
  detail::enumerate_tuples(indices, max_len, distinct, cur, 0, out);
  return out;
}

struct ZFRelationsReport {
  double create_create = 0.0;       // Z*(a) Z*(b) - S(a-b) Z*(b) Z*(a)
  double annihilate_pair = 0.0;     // Z(a) Z(b) - S(a-b) Z(b) Z(a)
  double annihilate_create = 0.0;   // Z(a) Z*(b) - S(b-a) Z*(b) Z(a) - delta_ab / w_a
  double equal_rapidity = 0.0;      // the same with a = b

  double max() const { return std::max({create_create, annihilate_pair, annihilate_create, equal_rapidity}); }
};

/// Applies both sides of the exchange relations to every basis state with
/// at most 3 particles over the sampled rapidities.
inline ZFRelationsReport zf_relations_check(const SMatrixModel& model, const RapidityGrid& grid,
                                            const std::vector<int>& sample) {
  ZFRelationsReport r;
  const auto basis = basis_tuples(sample, 3, model.hard_core());
  auto basis_state = [&](const Tuple& t) {
    TruncatedFockState s;
    s.n_max = 5;
    s.amplitudes[t] = 1.0;
    return s;
  };
  for (const Tuple& t : basis) {
    const auto psi = basis_state(t);
    for (int a : sample) {
      const double ta = grid.theta(static_cast<std::size_t>(a));
      for (int b : sample) {
        const double tb = grid.theta(static_cast<std::size_t>(b));
        const auto za = [&](const TruncatedFockState& s) { return zf_annihilate(a, s, model, grid); };
        const auto zb = [&](const TruncatedFockState& s) { return zf_annihilate(b, s, model, grid); };
        const auto ca = [&](const TruncatedFockState& s) { return zf_create(a, s, model, grid); };
        const auto cb = [&](const TruncatedFockState& s) { return zf_create(b, s, model, grid); };
        auto ac = za(cb(psi)) - model(tb - ta) * cb(za(psi));
        if (a == b) ac = ac - (1.0 / grid.weight(static_cast<std::size_t>(a))) * psi;
        if (a == b) {
          r.equal_rapidity = std::max(r.equal_rapidity, detail::state_distance(ac, TruncatedFockState{}));
          continue;
        }
        r.annihilate_create = std::max(r.annihilate_create, detail::state_distance(ac, TruncatedFockState{}));
        r.create_create = std::max(r.create_create,
                                   detail::state_distance(ca(cb(psi)), model(ta - tb) * cb(ca(psi))));
        r.annihilate_pair = std::max(r.annihilate_pair,
                                     detail::state_distance(za(zb(psi)), model(ta - tb) * zb(za(psi))));
      }
    }
  }
  return r;
}

/// max |S(theta) - S(i pi - theta)| over the grid.
inline double crossing_check(const SMatrixModel& model, const RapidityGrid& grid) {
  require_pole_free(model);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.points; ++k) {
    const double th = grid.theta(k);
    worst = std::max(worst, std::abs(model(th) - model(cplx(-th, std::numbers::pi))));
  }
  return worst;
}

/// max |S(theta)^* - S(-theta)| and max ||S(theta)| - 1| over the grid.
inline std::pair<double, double> unitarity_check(const SMatrixModel& model, const RapidityGrid& grid) {
  double herm = 0.0, mod = 0.0;
  for (std::size_t k = 0; k < grid.points; ++k) {
    const double th = grid.theta(k);
    herm = std::max(herm, std::abs(std::conj(model(th)) - model(-th)));
    mod = std::max(mod, std::abs(std::abs(model(th)) - 1.0));
  }
  return {herm, mod};
}

/// ||N^{-1/2} Z*(f) psi|| / (||f|| ||psi||), which stays <= 1.
inline double number_bound_ratio(const VectorC& f, const TruncatedFockState& psi, const SMatrixModel& model,
                                 const RapidityGrid& grid) {
  auto out = zf_create_smeared(f, psi, model, grid);
  for (auto& [t, c] : out.amplitudes) c /= std::sqrt(static_cast<double>(t.size()));
  double fn = 0.0;
  for (std::size_t k = 0; k < grid.points; ++k) fn += grid.weight(k) * std::norm(f(k));
  const double denom = std::sqrt(fn) * fock_norm(psi, grid);
  return denom == 0.0 ? 0.0 : fock_norm(out, grid) / denom;
}

// ---------------------------------------------------------------------------
// Scattering-deformed modular conjugation
// ---------------------------------------------------------------------------

/// prod_{i > j} S(theta_i - theta_j) on the ordered tuple.
inline cplx scattering_phase(const Tuple& t, const SMatrixModel& model, const RapidityGrid& grid) {
  cplx p = 1.0;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t i = j + 1; i < t.size(); ++i)
      p *= model(grid.theta(static_cast<std::size_t>(t[i])) - grid.theta(static_cast<std::size_t>(t[j])));
  return p;
}

/// J = S J0 with J0 the free conjugation (complex conjugation of amplitudes).
inline TruncatedFockState apply_scattering_J(const TruncatedFockState& psi, const SMatrixModel& model,
                                             const RapidityGrid& grid) {
  TruncatedFockState out;
  out.n_max = psi.n_max;
  for (const auto& [t, c] : psi.amplitudes) out.add(t, scattering_phase(t, model, grid) * std::conj(c));
  return out;
}

struct ConjugationReport {
  double involution = 0.0;      // max |J^2 psi - psi|
  double antiunitarity = 0.0;   // max |<J a, J b> - <b, a>|
  double deviation_from_free = 0.0;
};

inline ConjugationReport scattering_conjugation_check(const SMatrixModel& model, const RapidityGrid& grid,
                                                      const std::vector<int>& sample, std::size_t n,
                                                      std::uint64_t seed = 7) {
  const auto basis = basis_tuples(sample, n, model.hard_core());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_state = [&]() {
    TruncatedFockState s;
    s.n_max = n;
    for (const auto& t : basis) s.add(t, cplx(gauss(rng), gauss(rng)) / std::sqrt(basis_norm_sq(t, grid)));
    return s;
  };
  ConjugationReport r;
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_state();
    const auto b = random_state();
    const auto ja = apply_scattering_J(a, model, grid);
    const auto jb = apply_scattering_J(b, model, grid);
    const auto jja = apply_scattering_J(ja, model, grid);
    double scale = 0.0;
    for (const auto& [t, c] : a.amplitudes) scale = std::max(scale, std::abs(c));
    r.involution = std::max(r.involution, detail::state_distance(jja, a) / scale);
    const cplx lhs = fock_inner(ja, jb, grid), rhs = fock_inner(b, a, grid);
    r.antiunitarity = std::max(r.antiunitarity, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    TruncatedFockState j0;
    for (const auto& [t, c] : a.amplitudes) j0.add(t, std::conj(c));
    r.deviation_from_free = std::max(r.deviation_from_free, detail::state_distance(ja, j0) / scale);
  }
  return r;
}

// ---------------------------------------------------------------------------
// KMS four-point identity
// ---------------------------------------------------------------------------

struct KmsResult {
  cplx direct = 0.0;  // <Omega, F(f1') F(f2') F(f2) F(f1) Omega>
  cplx cycled = 0.0;  // <Delta^{1/2} Y* Omega, Delta^{1/2} F(f1') Omega>
  double residual = 0.0;
};

/// Checks omega(X Y) = <Delta^{1/2} Y* Omega, Delta^{1/2} X Omega> for
/// X = F(f1'), Y = F(f2') F(f2) F(f1), with F(f) = Z*(f^) + Z(f^). The boost
/// at imaginary parameter is the contour shift theta -> theta + i pi, done
/// with complex-rapidity quadrature of the test functions.
inline KmsResult kms_fourpoint_check(const SMatrixModel& model, const RapidityGrid& grid, const SpacetimeBump& f1,
                                     const SpacetimeBump& f2, const SpacetimeBump& f1p, const SpacetimeBump& f2p) {
  require_pole_free(model);
  for (const auto* f : {&f1, &f2, &f1p, &f2p})
    if (!f->inside(WedgeSide::Right)) throw Error(ErrorKind::SupportViolation, "KMS test functions must lie in the wedge");
  const std::size_t P = grid.points;
  const VectorR w = grid.weights();
  const VectorR th = grid.thetas();

  struct Sampled {
    VectorC real, shifted;  // f^(theta), f^(theta + i pi)
  };
  auto sample = [&](const SpacetimeBump& f) {
    const WedgeTransform tr(f, grid.mass);
    Sampled s{VectorC(P), VectorC(P)};
    for (std::size_t k = 0; k < P; ++k) {
      s.real(k) = tr(cplx(th(k), 0.0));
      s.shifted(k) = tr(cplx(th(k), std::numbers::pi));
    }
    return s;
  };
  const Sampled h1 = sample(f1), h2 = sample(f2), h1p = sample(f1p), h2p = sample(f2p);
  auto inner = [&](const VectorC& a, const VectorC& b) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < P; ++k) acc += w(k) * std::conj(a(k)) * b(k);
    return acc;
  };
  // one-particle part of F(a) F(b) F(c) Omega, evaluated at theta + i shift
  auto psi = [&](const Sampled& a, const Sampled& b, const Sampled& c, bool shifted) {
    VectorC ac(P);
    for (std::size_t k = 0; k < P; ++k) ac(k) = w(k) * std::conj(a.real(k)) * c.real(k);
    const cplx ab = inner(a.real, b.real), bc = inner(b.real, c.real);
    const double lift = shifted ? std::numbers::pi : 0.0;
    VectorC out(P);
    for (std::size_t k = 0; k < P; ++k) {
      cplx conv = 0.0;
      for (std::size_t l = 0; l < P; ++l) conv += model(cplx(th(k) - th(l), lift)) * ac(l);
      const cplx bk = shifted ? b.shifted(k) : b.real(k);
      const cplx ck = shifted ? c.shifted(k) : c.real(k);
      const cplx ak = shifted ? a.shifted(k) : a.real(k);
      out(k) = bk * conv + ab * ck + bc * ak;
    }
    return out;
  };
  KmsResult r;
  r.direct = inner(h1p.real, psi(h2p, h2, h1, false));
  r.cycled = inner(psi(h1, h2, h2p, true), h1p.shifted);
  r.residual = std::abs(r.direct - r.cycled) / std::max(std::abs(r.direct), 1e-300);
  return r;
}

/// Default wedge test functions used by the CLI and the acceptance run.
inline std::array<SpacetimeBump, 4> default_kms_bumps() {
  return {SpacetimeBump{0.0, 2.0, 0.3}, SpacetimeBump{0.2, 2.6, 0.35}, SpacetimeBump{0.1, 3.0, 0.4},
          SpacetimeBump{-0.3, 2.4, 0.3}};
}

}  // namespace sectorkit
