#pragma once

// Inclusions of finite-dimensional multi-matrix algebras: the GNS model of
// Mat_n, the Jones projection e_B and the index by both routes.

#include <cstdint>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "error.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sectorkit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Dense matrix of exact fractions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "rational matrix product");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.num() == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j).num() != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  MatrixR to_double() const {
    MatrixR m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_double();
    return m;
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// ---------------------------------------------------------------------------
// Algebras and inclusions
// ---------------------------------------------------------------------------

struct MatrixBlock {
  std::int64_t size = 1;
  std::int64_t multiplicity = 1;
};

/// (+)_i Mat_{n_i} (x) 1_{m_i}
struct MultiMatrixAlgebra {
  std::vector<MatrixBlock> blocks;

  bool is_factor() const noexcept { return blocks.size() == 1; }
};

struct InclusionSpec {
  MultiMatrixAlgebra small;
  MultiMatrixAlgebra big;
  IntMatrix incidence;  // rows: big blocks, columns: small blocks
};

inline void validate_inclusion(const InclusionSpec& inc) {
  for (const auto* alg : {&inc.small, &inc.big}) {
    if (alg->blocks.empty()) throw Error(ErrorKind::InvalidInclusion, "algebra has no blocks");
    for (const auto& b : alg->blocks)
      if (b.size < 1 || b.multiplicity < 1)
        throw Error(ErrorKind::InvalidInclusion, "block sizes and multiplicities must be >= 1");
  }
  if (inc.incidence.size() != inc.big.blocks.size())
    throw Error(ErrorKind::ShapeMismatch, "incidence needs one row per big block");
  for (std::size_t a = 0; a < inc.big.blocks.size(); ++a) {
    if (inc.incidence[a].size() != inc.small.blocks.size())
      throw Error(ErrorKind::ShapeMismatch, "incidence needs one column per small block");
    std::int64_t n = 0;
    for (std::size_t b = 0; b < inc.small.blocks.size(); ++b) {
      if (inc.incidence[a][b] < 0) throw Error(ErrorKind::InvalidInclusion, "negative incidence entry");
      n += inc.incidence[a][b] * inc.small.blocks[b].size;
    }
    if (n != inc.big.blocks[a].size)
      throw Error(ErrorKind::InvalidInclusion, "big block " + std::to_string(a) + " has size " +
                                                   std::to_string(inc.big.blocks[a].size) + " but the embedding fills " +
                                                   std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// GNS realization of Mat_n
// ---------------------------------------------------------------------------

/// H = C^{n^2} with (x, y) = (1/n) Tr x* y, vectors stored by column stacking
/// (index i + n j holds x_ij). J = K o P with P the transpose permutation.
struct GnsRealization {
  std::size_t n = 1;
  MatrixR P;  // real part of J: J xi = P conj(xi)

  std::size_t dimension() const noexcept { return n * n; }

  VectorC vec(const MatrixC& x) const {
    VectorC v(dimension());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) v(i + n * j) = x(i, j);
    return v;
  }

  MatrixC unvec(const VectorC& v) const {
    MatrixC x(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) x(i, j) = v(i + n * j);
    return x;
  }

  /// xi -> a xi
  MatrixC left_action(const MatrixC& a) const {
    return Eigen::kroneckerProduct(MatrixC::Identity(n, n), a);
  }

  /// xi -> xi a
  MatrixC right_action(const MatrixC& a) const {
    return Eigen::kroneckerProduct(a.transpose(), MatrixC::Identity(n, n));
  }

  VectorC apply_J(const VectorC& xi) const { return P.cast<cplx>() * xi.conjugate(); }

  /// Matrix of the complex-linear operator J A J.
  MatrixC conjugate_by_J(const MatrixC& A) const {
    const MatrixC p = P.cast<cplx>();
    return p * A.conjugate() * p;
  }

  cplx inner(const VectorC& x, const VectorC& y) const { return x.dot(y) / static_cast<double>(n); }
  double norm(const VectorC& x) const { return std::sqrt(inner(x, x).real()); }
};

inline GnsRealization gns_realize(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::SizeCap, "GNS realization supports 1 <= n <= 12");
  GnsRealization g;
  g.n = n;
  g.P = MatrixR::Zero(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.P(i + n * j, j + n * i) = 1.0;
  return g;
}

// ---------------------------------------------------------------------------
// Jones index
// ---------------------------------------------------------------------------

struct ProjectorIndexResult {
  Rational index;
  Rational tau_eB;
  RationalMatrix e_B;  // on the GNS space of the big factor
  std::size_t big_size = 0;
};

namespace detail {

/// Matrix units of the small algebra embedded in Mat_N: block b of size n_b
/// is repeated incidence[0][b] times along the diagonal.
struct Embedding {
  std::size_t N = 0;
  struct Unit {
    std::size_t block, i, j;
    std::vector<std::pair<std::size_t, std::size_t>> entries;  // positions of ones in Mat_N
  };
  std::vector<Unit> units;
};

inline Embedding embed_small(const InclusionSpec& inc) {
  Embedding e;
  e.N = static_cast<std::size_t>(inc.big.blocks[0].size);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < inc.small.blocks.size(); ++b) {
    const auto nb = static_cast<std::size_t>(inc.small.blocks[b].size);
    const auto lam = static_cast<std::size_t>(inc.incidence[0][b]);
    for (std::size_t i = 0; i < nb; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        Embedding::Unit u{b, i, j, {}};
        for (std::size_t k = 0; k < lam; ++k) u.entries.emplace_back(offset + k * nb + i, offset + k * nb + j);
        if (!u.entries.empty()) e.units.push_back(std::move(u));
      }
    }
    offset += lam * nb;
  }
  return e;
}

}  // namespace detail

/// [A : B] = tau(e_B)^{-1}, with e_B the projection onto closure(B Omega),
/// Omega = 1 in the GNS space of A = Mat_N, and tau = Tr / dim H.
inline ProjectorIndexResult jones_index_projector(const InclusionSpec& inc) {
  validate_inclusion(inc);
  if (!inc.big.is_factor())
    throw Error(ErrorKind::NotAFactor, "the projector route needs a factor as the big algebra");
  const auto emb = detail::embed_small(inc);
  const std::size_t N = emb.N;
  if (N > 12) throw Error(ErrorKind::SizeCap, "projector route supports N <= 12");
  const std::size_t dim = N * N;

  ProjectorIndexResult res;
  res.big_size = N;
  res.e_B = RationalMatrix(dim, dim);
  // The embedded matrix units have disjoint supports, so their vectors are
  // orthogonal and e_B = sum_u v_u v_u^T / |v_u|^2.
  for (const auto& u : emb.units) {
    std::vector<std::size_t> idx;
    for (auto [r, c] : u.entries) idx.push_back(r + N * c);
    const Rational w(1, static_cast<std::int64_t>(idx.size()));
    for (std::size_t p : idx)
      for (std::size_t q : idx) res.e_B(p, q) += w;
  }

  const RationalMatrix sq = res.e_B * res.e_B;
  if (!(sq == res.e_B) || !(res.e_B.transpose() == res.e_B))
    throw Error(ErrorKind::NonProjector, "e_B is not an orthogonal projection");

  // e_B commutes with the left action of every embedded matrix unit.
  for (const auto& u : emb.units) {
    RationalMatrix le(dim, dim), el(dim, dim);
    for (std::size_t col = 0; col < N; ++col) {
      for (auto [r, c] : u.entries) {
        for (std::size_t q = 0; q < dim; ++q) {
          le(r + N * col, q) += res.e_B(c + N * col, q);
          el(q, c + N * col) += res.e_B(q, r + N * col);
        }
      }
    }
    if (!(le == el)) throw Error(ErrorKind::NonProjector, "e_B does not commute with the small algebra");
  }

  res.tau_eB = res.e_B.trace() * Rational(1, static_cast<std::int64_t>(dim));
  res.index = res.tau_eB.inverse();
  return res;
}

struct IncidenceIndexResult {
  std::int64_t index = 0;  // sum of squared entries
  double opnorm_sq = 0.0;  // largest singular value squared
};

inline IncidenceIndexResult jones_index_incidence(const IntMatrix& lambda) {
  IncidenceIndexResult r;
  if (lambda.empty()) return r;
  const std::size_t cols = lambda[0].size();
  MatrixR m(lambda.size(), cols);
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    if (lambda[a].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged incidence matrix");
    for (std::size_t b = 0; b < cols; ++b) {
      if (lambda[a][b] < 0) throw Error(ErrorKind::InvalidInclusion, "negative incidence entry");
      r.index += lambda[a][b] * lambda[a][b];
      m(a, b) = static_cast<double>(lambda[a][b]);
    }
  }
  const double s = operator_norm(m);
  r.opnorm_sq = s * s;
  return r;
}

inline IncidenceIndexResult jones_index_incidence(const InclusionSpec& inc) {
  validate_inclusion(inc);
  return jones_index_incidence(inc.incidence);
}

/// Path counting through the intermediate level: (lambda1 * lambda2).
inline IntMatrix bratteli_compose(const IntMatrix& lambda1, const IntMatrix& lambda2) {
  const std::size_t inner = lambda2.size();
  for (const auto& row : lambda1)
    if (row.size() != inner) throw Error(ErrorKind::ShapeMismatch, "inner dimensions of the Bratteli steps differ");
  const std::size_t cols = inner == 0 ? 0 : lambda2[0].size();
  for (const auto& row : lambda2)
    if (row.size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged incidence matrix");
  IntMatrix out(lambda1.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t a = 0; a < lambda1.size(); ++a)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t b = 0; b < cols; ++b) out[a][b] += lambda1[a][k] * lambda2[k][b];
  return out;
}

}  // namespace sectorkit
