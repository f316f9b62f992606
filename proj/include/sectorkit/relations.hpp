#pragma once

// Residual checks for braid-type relations on explicit matrix generators.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace sectorkit {

enum class RelationKind { Artin, Hecke, MixedGinf, BirmanWenzl };

struct RelationSet {
  RelationKind kind = RelationKind::Artin;
  cplx t = 1.0;                  // Hecke: g^2 = (t - 1) g + t
  cplx mu1 = 0.0, mu2 = 0.0, mu3 = 0.0;  // Birman-Wenzl eigenvalues

  static RelationSet artin() { return {}; }
  static RelationSet hecke(cplx t) { return {RelationKind::Hecke, t}; }
  static RelationSet mixed_ginf() { return {RelationKind::MixedGinf}; }
  static RelationSet birman_wenzl(cplx m1, cplx m2, cplx m3) {
    return {RelationKind::BirmanWenzl, 1.0, m1, m2, m3};
  }
};

struct RelationReport {
  std::map<std::string, double> residuals;  // per relation family

  double max_residual() const {
    double m = 0.0;
    for (const auto& [k, v] : residuals) m = std::max(m, v);
    return m;
  }

  void record(const std::string& name, double r) {
    auto& slot = residuals[name];
    slot = std::max(slot, r);
  }
};

namespace detail {

inline void check_square_family(const std::vector<MatrixC>& gens, Eigen::Index size) {
  for (const auto& g : gens)
    if (g.rows() != g.cols() || g.rows() != size)
      throw Error(ErrorKind::ShapeMismatch, "generators must be square matrices of equal size");
}

inline void artin_residuals(const std::vector<MatrixC>& g, const std::string& prefix, RelationReport& rep) {
  rep.record(prefix + "braid", 0.0);
  rep.record(prefix + "far_commute", 0.0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    rep.record(prefix + "braid", max_abs(g[i] * g[i + 1] * g[i] - g[i + 1] * g[i] * g[i + 1]));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 2; j < g.size(); ++j) rep.record(prefix + "far_commute", max_abs(g[i] * g[j] - g[j] * g[i]));
}

inline MatrixC inverse_or_throw(const MatrixC& m) {
  Eigen::FullPivLU<MatrixC> lu(m);
  if (!lu.isInvertible()) throw Error(ErrorKind::InvalidInput, "generator is not invertible");
  return lu.inverse();
}

}  // namespace detail

/// Max residual of the chosen relation family over all instances.
/// For MixedGinf the list holds b_1..b_m followed by t_1..t_m.
inline RelationReport relation_check(const std::vector<MatrixC>& gens, const RelationSet& rel) {
  RelationReport rep;
  if (gens.empty()) return rep;
  const Eigen::Index size = gens[0].rows();
  detail::check_square_family(gens, size);
  const MatrixC id = MatrixC::Identity(size, size);

  switch (rel.kind) {
    case RelationKind::Artin: detail::artin_residuals(gens, "", rep); break;
    case RelationKind::Hecke:
      detail::artin_residuals(gens, "", rep);
      for (const auto& g : gens) rep.record("quadratic", max_abs(g * g - (rel.t - 1.0) * g - rel.t * id));
      break;
    case RelationKind::MixedGinf: {
      if (gens.size() % 2) throw Error(ErrorKind::ShapeMismatch, "mixed relations need equally many b and t");
      const std::size_t m = gens.size() / 2;
      const std::vector<MatrixC> b(gens.begin(), gens.begin() + static_cast<long>(m));
      const std::vector<MatrixC> t(gens.begin() + static_cast<long>(m), gens.end());
      detail::artin_residuals(b, "b_", rep);
      detail::artin_residuals(t, "t_", rep);
      rep.record("t_involution", 0.0);
      rep.record("mixed_far", 0.0);
      rep.record("mixed_bTT", 0.0);
      rep.record("mixed_bbT", 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        rep.record("t_involution", max_abs(t[i] * t[i] - id));
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t gap = i > j ? i - j : j - i;
          if (gap >= 2) rep.record("mixed_far", max_abs(b[i] * t[j] - t[j] * b[i]));
          if (gap == 1) {
            rep.record("mixed_bTT", max_abs(b[i] * t[j] * t[i] - t[j] * t[i] * b[j]));
            rep.record("mixed_bbT", max_abs(b[i] * b[j] * t[i] - t[j] * b[i] * b[j]));
          }
        }
      }
      break;
    }
    case RelationKind::BirmanWenzl: {
      detail::artin_residuals(gens, "", rep);
      const cplx m1 = rel.mu1, m2 = rel.mu2, m3 = rel.mu3;
      const cplx norm = m3 / ((m3 - m1) * (m3 - m2));
      for (const auto& g : gens) {
        rep.record("cubic", max_abs((g - m1 * id) * (g - m2 * id) * (g - m3 * id)));
        const MatrixC ginv = detail::inverse_or_throw(g);
        const MatrixC e = norm * (g - (m1 + m2) * id + m1 * m2 * ginv);
        rep.record("E_idempotent", max_abs(e * e - e));
        rep.record("E_eigen", max_abs(e * g - m3 * e));
      }
      break;
    }
  }
  return rep;
}

}  // namespace sectorkit
