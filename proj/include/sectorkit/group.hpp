#pragma once

// Superselection data of the group algebra CG for finite permutation groups:
// conjugacy classes, class-sum fusion N_ij^l, the character table obtained by
// simultaneously diagonalizing the commuting class-sum matrices, and the
// unitary character matrix S.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace sectorkit {

// ---------------------------------------------------------------------------
// Permutations and group closure
// ---------------------------------------------------------------------------

/// A bijection of {0, ..., degree-1}; images[i] is the image of i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<int>(i);
    return p;
  }

  std::size_t degree() const noexcept { return images.size(); }

  bool is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) p.images[images[i]] = static_cast<int>(i);
    return p;
  }

  /// Composition as maps: (a * b)(i) = a(b(i)), so b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation p;
    p.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i) p.images[i] = a.images[b.images[i]];
    return p;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct GroupOptions {
  std::size_t order_cap = 100000;
  /// Groups up to this order keep a dense multiplication table.
  std::size_t table_limit = 4096;
};

/// A finite permutation group with canonically (BFS) ordered elements.
/// Element 0 is the identity.
class FiniteGroupData {
 public:
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  std::size_t order() const noexcept { return elements.size(); }

  std::size_t index_of(const Permutation& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) throw Error(ErrorKind::InvalidPermutation, "element not in group");
    return it->second;
  }

  bool contains(const Permutation& p) const { return lookup_.count(p) != 0; }

  /// Index of elements[a] * elements[b].
  std::size_t mult(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * elements.size() + b];
    return index_of(elements[a] * elements[b]);
  }

  std::size_t inverse(std::size_t a) const { return inverses_[a]; }

  bool has_mult_table() const noexcept { return !table_.empty(); }

 private:
  friend FiniteGroupData make_group_from_elements(std::size_t, std::vector<Permutation>,
                                                  std::vector<Permutation>, const GroupOptions&);
  std::map<Permutation, std::size_t> lookup_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverses_;
};

inline FiniteGroupData make_group_from_elements(std::size_t degree, std::vector<Permutation> generators,
                                                std::vector<Permutation> elements, const GroupOptions& opts) {
  FiniteGroupData g;
  g.degree = degree;
  g.generators = std::move(generators);
  g.elements = std::move(elements);
  for (std::size_t i = 0; i < g.elements.size(); ++i) g.lookup_.emplace(g.elements[i], i);
  const std::size_t n = g.elements.size();
  if (n <= opts.table_limit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = static_cast<std::uint32_t>(g.lookup_.at(g.elements[a] * g.elements[b]));
  }
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) g.inverses_[a] = g.lookup_.at(g.elements[a].inverse());
  return g;
}

/// Breadth-first closure of the generators: elements are discovered by right
/// multiplication with the generators in their given order.
inline FiniteGroupData enumerate_group(std::size_t degree, const std::vector<Permutation>& generators,
                                       const GroupOptions& opts = {}) {
  if (degree == 0) throw Error(ErrorKind::InvalidPermutation, "degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree || !g.is_valid())
      throw Error(ErrorKind::InvalidPermutation, "generator is not a permutation of degree " + std::to_string(degree));
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<Permutation, std::size_t> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = elements[head] * gen;
      if (seen.count(next)) continue;
      if (elements.size() >= opts.order_cap)
        throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(opts.order_cap));
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return make_group_from_elements(degree, generators, std::move(elements), opts);
}

// ---------------------------------------------------------------------------
// Conjugacy classes and class-sum fusion
// ---------------------------------------------------------------------------

struct ConjugacyData {
  std::vector<std::size_t> class_of;              // element index -> class index
  std::vector<std::size_t> reps;                  // minimal element index per class
  std::vector<std::size_t> sizes;                 // |K_i|
  std::vector<std::vector<std::size_t>> members;  // sorted element indices per class

  std::size_t class_count() const noexcept { return reps.size(); }
};

/// Classes are sorted by (size, minimal element index), so class 0 is {e}.
inline ConjugacyData conjugacy_classes(const FiniteGroupData& group) {
  const std::size_t n = group.order();
  std::vector<std::vector<std::size_t>> found;
  std::vector<bool> assigned(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t c = group.mult(group.mult(h, g), group.inverse(h));
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    found.push_back(std::move(cls));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });

  ConjugacyData cd;
  cd.class_of.assign(n, 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    cd.reps.push_back(found[i].front());
    cd.sizes.push_back(found[i].size());
    for (std::size_t e : found[i]) cd.class_of[e] = i;
  }
  cd.members = std::move(found);
  return cd;
}

/// N_ij^l = #{(a, b) in K_i x K_j : ab = g_l}.
struct ClassFusionTensor {
  Tensor3 n;

  std::size_t rank() const noexcept { return n.rank(); }

  /// (N_j)_i^l as an integer matrix.
  std::vector<std::vector<std::int64_t>> matrix(std::size_t j) const {
    const std::size_t r = rank();
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t l = 0; l < r; ++l) m[i][l] = n(i, j, l);
    return m;
  }
};

inline ClassFusionTensor class_fusion(const FiniteGroupData& group, const ConjugacyData& cd) {
  const std::size_t r = cd.class_count();
  ClassFusionTensor t{Tensor3(r)};
  std::vector<std::int64_t> hits(group.order());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::fill(hits.begin(), hits.end(), 0);
      for (std::size_t a : cd.members[i])
        for (std::size_t b : cd.members[j]) ++hits[group.mult(a, b)];
      for (std::size_t l = 0; l < r; ++l) {
        const std::int64_t count = hits[cd.reps[l]];
        for (std::size_t c : cd.members[l]) {
          if (hits[c] != count)
            throw Error(ErrorKind::RepresentativeInconsistency,
                        "class product count depends on the representative of class " + std::to_string(l));
        }
        t.n(i, j, l) = count;
      }
    }
  }
  return t;
}

/// True iff the integer matrices N_j pairwise commute.
inline bool class_matrices_commute(const ClassFusionTensor& t) {
  const std::size_t r = t.rank();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) {
          std::int64_t ab = 0, ba = 0;
          for (std::size_t k = 0; k < r; ++k) {
            ab += t.n(i, a, k) * t.n(k, b, l);
            ba += t.n(i, b, k) * t.n(k, a, l);
          }
          if (ab != ba) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Character table
// ---------------------------------------------------------------------------

struct CharacterOptions {
  int max_attempts = 8;
  double gap_tolerance = 1e-7;
  double unitarity_tolerance = 1e-9;
  std::uint64_t seed = 0x5ec7u;
};

struct CharacterTable {
  std::size_t group_order = 0;
  std::vector<std::size_t> class_sizes;
  MatrixC chi;             // chi(l, j) = chi_l(g_j)
  std::vector<int> dims;   // d_l
  MatrixC central_values;  // central_values(l, i) = |K_i| chi_l(g_i) / d_l = pi_l(Q_i)
  MatrixC s_matrix;        // S(l, j) = sqrt(|K_j|/|G|) chi_l(g_j)

  std::size_t size() const noexcept { return dims.size(); }
};

namespace detail {

inline double round_to(double x, double quantum) { return std::round(x / quantum) * quantum; }

inline bool chi_row_less(const VectorC& a, const VectorC& b) {
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    const double ar = round_to(a(j).real(), 1e-8), br = round_to(b(j).real(), 1e-8);
    if (ar != br) return ar < br;
    const double ai = round_to(a(j).imag(), 1e-8), bi = round_to(b(j).imag(), 1e-8);
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace detail

/// The eigenvectors of a generic combination sum_j c_j N_j are the vectors
/// (pi_l(Q_i))_i; normalizing pi_l(Q_0) = 1 and using
/// sum_i |K_i| |chi_l(g_i)|^2 = |G| recovers d_l and chi_l.
inline CharacterTable character_table(const FiniteGroupData& group, const ConjugacyData& cd,
                                      const ClassFusionTensor& fusion, const CharacterOptions& opts = {}) {
  const std::size_t r = cd.class_count();
  const double order = static_cast<double>(group.order());
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coeff(0.5, 1.5);

  std::vector<VectorC> omegas;
  for (int attempt = 0; attempt < opts.max_attempts && omegas.empty(); ++attempt) {
    MatrixR combo = MatrixR::Zero(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      const double c = coeff(rng);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < r; ++l) combo(i, l) += c * static_cast<double>(fusion.n(i, j, l));
    }
    Eigen::EigenSolver<MatrixR> es(combo, true);
    if (es.info() != Eigen::Success) continue;
    const VectorC ev = es.eigenvalues();
    bool separated = true;
    for (std::size_t a = 0; a < r && separated; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        if (std::abs(ev(a) - ev(b)) < opts.gap_tolerance) {
          separated = false;
          break;
        }
    if (!separated) continue;
    const MatrixC vecs = es.eigenvectors();
    for (std::size_t a = 0; a < r; ++a) omegas.push_back(vecs.col(a) / vecs(0, a));
  }
  if (omegas.empty())
    throw Error(ErrorKind::DegenerateSpectrum,
                "class-sum combination stayed degenerate after " + std::to_string(opts.max_attempts) + " attempts");

  struct Row {
    int dim;
    VectorC chi;
    bool trivial;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    double norm = 0.0;
    for (std::size_t i = 0; i < r; ++i) norm += std::norm(w(i)) / static_cast<double>(cd.sizes[i]);
    const double d = std::sqrt(order / norm);
    const int dim = static_cast<int>(std::lround(d));
    if (std::abs(d - dim) > 1e-6)
      throw Error(ErrorKind::NonUnitaryS, "representation dimension " + std::to_string(d) + " is not integral");
    VectorC chi(r);
    for (std::size_t i = 0; i < r; ++i) chi(i) = static_cast<double>(dim) * w(i) / static_cast<double>(cd.sizes[i]);
    bool trivial = true;
    for (std::size_t i = 0; i < r; ++i) trivial = trivial && std::abs(chi(i) - 1.0) < 1e-8;
    rows.push_back({dim, chi, trivial});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.trivial != b.trivial) return a.trivial;
    if (a.dim != b.dim) return a.dim < b.dim;
    return detail::chi_row_less(a.chi, b.chi);
  });

  CharacterTable ct;
  ct.group_order = group.order();
  ct.class_sizes = cd.sizes;
  ct.chi.resize(r, r);
  ct.central_values.resize(r, r);
  ct.s_matrix.resize(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    ct.dims.push_back(rows[l].dim);
    for (std::size_t j = 0; j < r; ++j) {
      const cplx chi = rows[l].chi(j);
      const double kj = static_cast<double>(cd.sizes[j]);
      ct.chi(l, j) = chi;
      ct.central_values(l, j) = kj * chi / static_cast<double>(rows[l].dim);
      ct.s_matrix(l, j) = std::sqrt(kj / order) * chi;
    }
  }
  const double unitarity = max_abs(ct.s_matrix * ct.s_matrix.adjoint() - MatrixC::Identity(r, r));
  if (unitarity > opts.unitarity_tolerance)
    throw Error(ErrorKind::NonUnitaryS, "character matrix deviates from unitarity by " + std::to_string(unitarity));
  return ct;
}

/// Convenience: full pipeline from a group.
struct GroupAnalysis {
  FiniteGroupData group;
  ConjugacyData classes;
  ClassFusionTensor fusion;
  CharacterTable characters;
};

inline GroupAnalysis analyze_group(FiniteGroupData group, const CharacterOptions& opts = {}) {
  GroupAnalysis ga{std::move(group), {}, {}, {}};
  ga.classes = conjugacy_classes(ga.group);
  ga.fusion = class_fusion(ga.group, ga.classes);
  ga.characters = character_table(ga.group, ga.classes, ga.fusion, opts);
  return ga;
}

// ---------------------------------------------------------------------------
// Representation fusion and the S relations
// ---------------------------------------------------------------------------

struct RepFusionTensor {
  Tensor3 ntilde;  // ntilde(k, l, m): multiplicity of pi_m in pi_k (x) pi_l
};

inline RepFusionTensor rep_fusion(const CharacterTable& ct, double tolerance = 1e-8) {
  const std::size_t r = ct.size();
  const double order = static_cast<double>(ct.group_order);
  RepFusionTensor out{Tensor3(r)};
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      for (std::size_t m = 0; m < r; ++m) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < r; ++j)
          acc += static_cast<double>(ct.class_sizes[j]) * ct.chi(k, j) * ct.chi(l, j) * std::conj(ct.chi(m, j));
        acc /= order;
        const double rounded = std::round(acc.real());
        if (std::abs(acc - rounded) > tolerance || rounded < 0)
          throw Error(ErrorKind::NonIntegralFusion, "tensor-product multiplicity is not a nonnegative integer");
        out.ntilde(k, l, m) = static_cast<std::int64_t>(rounded);
      }
    }
  }
  return out;
}

struct SRelationReport {
  double class_residual = 0.0;          // Q_i^k Q_j^k - sum_c N_ij^c Q_c^k
  double rep_residual = 0.0;            // (S_kj/S_0j)(S_lj/S_0j) - sum_m Ntilde_kl^m S_mj/S_0j
  double orthogonality_residual = 0.0;  // (1/|G|) sum_j |K_j| chi_k chi_l^* - delta_kl
  double unitarity_residual = 0.0;      // S S^dagger - 1

  double max() const {
    return std::max({class_residual, rep_residual, orthogonality_residual, unitarity_residual});
  }
};

inline SRelationReport verify_s_relations(const CharacterTable& ct, const ClassFusionTensor& fusion,
                                          const RepFusionTensor& rep) {
  const std::size_t r = ct.size();
  if (fusion.rank() != r || rep.ntilde.rank() != r)
    throw Error(ErrorKind::ShapeMismatch, "fusion tensors and character table disagree in rank");
  SRelationReport rep_out;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        cplx rhs = 0.0;
        for (std::size_t c = 0; c < r; ++c) rhs += static_cast<double>(fusion.n(i, j, c)) * ct.central_values(k, c);
        rep_out.class_residual =
            std::max(rep_out.class_residual, std::abs(ct.central_values(k, i) * ct.central_values(k, j) - rhs));
      }
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    const cplx s0 = ct.s_matrix(0, j);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < r; ++l) {
        cplx rhs = 0.0;
        for (std::size_t m = 0; m < r; ++m) rhs += static_cast<double>(rep.ntilde(k, l, m)) * ct.s_matrix(m, j) / s0;
        const cplx lhs = (ct.s_matrix(k, j) / s0) * (ct.s_matrix(l, j) / s0);
        rep_out.rep_residual = std::max(rep_out.rep_residual, std::abs(lhs - rhs));
      }
    }
  }
  const double order = static_cast<double>(ct.group_order);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < r; ++j)
        acc += static_cast<double>(ct.class_sizes[j]) * ct.chi(k, j) * std::conj(ct.chi(l, j));
      acc /= order;
      rep_out.orthogonality_residual = std::max(rep_out.orthogonality_residual, std::abs(acc - (k == l ? 1.0 : 0.0)));
    }
  }
  rep_out.unitarity_residual = max_abs(ct.s_matrix * ct.s_matrix.adjoint() - MatrixC::Identity(r, r));
  return rep_out;
}

/// Multiplicity of each irreducible in the left regular representation,
/// computed from its character (|G| at e, 0 elsewhere).
inline std::vector<int> regular_rep_multiplicities(const CharacterTable& ct) {
  const std::size_t r = ct.size();
  std::vector<int> mult(r);
  std::int64_t sum_sq = 0;
  for (std::size_t l = 0; l < r; ++l) {
    // (1/|G|) sum_g chi_reg(g) chi_l(g)^*, only g = e contributes.
    const cplx m = std::conj(ct.chi(l, 0));
    mult[l] = static_cast<int>(std::lround(m.real()));
    sum_sq += static_cast<std::int64_t>(ct.dims[l]) * ct.dims[l];
  }
  if (sum_sq != static_cast<std::int64_t>(ct.group_order))
    throw Error(ErrorKind::DimensionSumMismatch,
                "sum of squared dimensions " + std::to_string(sum_sq) + " != |G| = " + std::to_string(ct.group_order));
  return mult;
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// Centralizer C_G(g) as a group in its own right (elements in BFS order of
/// the closure of its members).
inline FiniteGroupData centralizer(const FiniteGroupData& group, std::size_t g, const GroupOptions& opts = {}) {
  std::vector<Permutation> gens;
  for (std::size_t h = 0; h < group.order(); ++h)
    if (group.mult(h, g) == group.mult(g, h) && h != 0) gens.push_back(group.elements[h]);
  return enumerate_group(group.degree, gens, opts);
}

}  // namespace sectorkit
