#pragma once

// Infinite spin chain with fixed two-sided tails: Pauli monomials acting on
// tail states, averaged magnetization commutators and sector orthogonality.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sectorkit {

/// prod_x sigma_{k_x}(x), k in {1, 2, 3}, over finitely many sites.
struct PauliMonomial {
  std::map<int, int> factors;

  static PauliMonomial single(int site, int k) {
    PauliMonomial m;
    m.set(site, k);
    return m;
  }

  void set(int site, int k) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidInput, "Pauli index must be 1, 2 or 3");
    factors[site] = k;
  }

  std::size_t support_size() const noexcept { return factors.size(); }

  /// Sites carrying sigma_1 or sigma_2.
  std::size_t flip_count() const {
    std::size_t n = 0;
    for (const auto& [x, k] : factors) n += (k != 3);
    return n;
  }
};

/// s : Z -> {+-1}, given inside [-N, N] and constant beyond on each side.
struct TailState {
  int window = 0;          // N
  std::vector<int> bits;   // bits[x + N]
  int left_tail = 1;
  int right_tail = 1;

  static TailState constant(int window, int value) {
    return {window, std::vector<int>(2 * window + 1, value), value, value};
  }

  bool contains(int site) const noexcept { return site >= -window && site <= window; }
  int spin(int site) const {
    if (site < -window) return left_tail;
    if (site > window) return right_tail;
    return bits[static_cast<std::size_t>(site + window)];
  }
  void flip(int site) { bits[static_cast<std::size_t>(site + window)] *= -1; }

  bool operator==(const TailState&) const = default;
};

/// sigma_3 multiplies by s(x), sigma_1 flips, sigma_2 = i s(x) flip.
inline std::pair<cplx, TailState> apply_pauli(const PauliMonomial& a, const TailState& s) {
  for (const auto& [x, k] : a.factors)
    if (!s.contains(x)) throw Error(ErrorKind::SupportOutsideWindow, "monomial acts outside the window");
  cplx coef = 1.0;
  TailState out = s;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
    const auto [x, k] = *it;
    const int sx = out.spin(x);
    switch (k) {
      case 1: out.flip(x); break;
      case 2:
        coef *= cplx(0.0, static_cast<double>(sx));
        out.flip(x);
        break;
      case 3: coef *= static_cast<double>(sx); break;
    }
  }
  return {coef, out};
}

struct CommutatorNorm {
  double numeric = 0.0;  // operator norm on the support factor
  Rational exact;        // 2 |{x : k_x in {1,2}}| / (2n + 1)
};

inline MatrixC pauli_matrix(int k) {
  MatrixC m(2, 2);
  switch (k) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// || [M_n, A] || with M_n = (2n+1)^{-1} sum_{|x| <= n} sigma_3(x), evaluated
/// on the tensor factor of supp A (the other sites commute with A).
inline CommutatorNorm magnetization_commutator_norm(const PauliMonomial& a, int n) {
  for (const auto& [x, k] : a.factors)
    if (x < -n || x > n) throw Error(ErrorKind::SupportOutsideWindow, "monomial support exceeds [-n, n]");
  const std::size_t k = a.support_size();
  const std::size_t dim = std::size_t{1} << k;
  MatrixC A = MatrixC::Identity(1, 1), M = MatrixC::Zero(dim, dim);
  std::size_t pos = 0;
  for (const auto& [x, idx] : a.factors) {
    MatrixC next(A.rows() * 2, A.cols() * 2);
    const MatrixC p = pauli_matrix(idx);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      for (Eigen::Index j = 0; j < A.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = A(i, j) * p;
    A = next;
    // sigma_3 at tensor slot pos: diagonal with sign from bit (k-1-pos)
    for (std::size_t b = 0; b < dim; ++b) M(b, b) += ((b >> (k - 1 - pos)) & 1) ? -1.0 : 1.0;
    ++pos;
  }
  M /= static_cast<double>(2 * n + 1);
  CommutatorNorm r;
  r.numeric = k == 0 ? 0.0 : operator_norm(MatrixC(M * A - A * M));
  r.exact = Rational(2 * static_cast<std::int64_t>(a.flip_count()), 2 * static_cast<std::int64_t>(n) + 1);
  return r;
}

/// <bra| A |ket>; identically zero when the tails differ.
inline cplx sector_overlap(const TailState& bra, const PauliMonomial& a, const TailState& ket) {
  if (bra.window != ket.window) throw Error(ErrorKind::WindowMismatch, "states use different windows");
  for (const auto& [x, k] : a.factors)
    if (!ket.contains(x)) throw Error(ErrorKind::SupportOutsideWindow, "monomial acts outside the window");
  if (bra.left_tail != ket.left_tail || bra.right_tail != ket.right_tail) return 0.0;
  const auto [c, out] = apply_pauli(a, ket);
  return out.bits == bra.bits ? c : cplx(0.0);
}

}  // namespace sectorkit
