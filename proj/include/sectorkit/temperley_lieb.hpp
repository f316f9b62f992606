#pragma once

// Temperley-Lieb diagram algebra with loop parameter delta, its Markov
// trace, Jones-Wenzl projectors and the Hecke generators g_k built from it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace sectorkit {

/// Planar pairing of 2n boundary points: top points 0..n-1 (left to right),
/// bottom points n..2n-1 (left to right). partner[p] is the point joined to p.
class TLDiagram {
 public:
  TLDiagram() = default;
  explicit TLDiagram(std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {}

  static TLDiagram identity(std::size_t n) {
    std::vector<std::uint8_t> p(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<std::uint8_t>(n + i);
      p[n + i] = static_cast<std::uint8_t>(i);
    }
    return TLDiagram(std::move(p));
  }

  /// Cup-cap on strands i, i+1 (1-based i).
  static TLDiagram cupcap(std::size_t n, std::size_t i) {
    if (i < 1 || i + 1 > n) throw Error(ErrorKind::IndexOutOfRange, "cup-cap position out of range");
    TLDiagram d = identity(n);
    auto& p = d.partner_;
    const auto a = static_cast<std::uint8_t>(i - 1), b = static_cast<std::uint8_t>(i);
    p[a] = b;
    p[b] = a;
    p[n + a] = static_cast<std::uint8_t>(n + b);
    p[n + b] = static_cast<std::uint8_t>(n + a);
    return d;
  }

  std::size_t strands() const noexcept { return partner_.size() / 2; }
  const std::vector<std::uint8_t>& partner() const noexcept { return partner_; }

  /// Sorted (p, q) pairs with p < q.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t p = 0; p < partner_.size(); ++p)
      if (p < partner_[p]) out.emplace_back(static_cast<int>(p), partner_[p]);
    return out;
  }

  /// Position of a point when the boundary is read around the rectangle.
  std::size_t circle_position(std::size_t p) const {
    const std::size_t n = strands();
    return p < n ? p : 3 * n - 1 - p;
  }

  bool is_valid() const {
    const std::size_t m = partner_.size();
    if (m % 2) return false;
    for (std::size_t p = 0; p < m; ++p)
      if (partner_[p] >= m || partner_[p] == p || partner_[partner_[p]] != p) return false;
    for (const auto& [a, b] : pairs()) {
      std::size_t x = circle_position(a), y = circle_position(b);
      if (x > y) std::swap(x, y);
      for (const auto& [c, d] : pairs()) {
        std::size_t u = circle_position(c), v = circle_position(d);
        if (u > v) std::swap(u, v);
        if (x < u && u < y && y < v) return false;
      }
    }
    return true;
  }

  /// Vertical reflection (the * operation).
  TLDiagram reflect() const {
    const std::size_t n = strands();
    std::vector<std::uint8_t> p(2 * n);
    auto flip = [n](std::size_t x) { return x < n ? x + n : x - n; };
    for (std::size_t x = 0; x < 2 * n; ++x) p[flip(x)] = static_cast<std::uint8_t>(flip(partner_[x]));
    return TLDiagram(std::move(p));
  }

  /// Adds a through-strand on the left; old strand i becomes strand i+1.
  TLDiagram shift() const {
    const std::size_t n = strands();
    auto lift = [n](std::size_t x) { return x < n ? x + 1 : x + 2; };
    std::vector<std::uint8_t> p(2 * n + 2);
    p[0] = static_cast<std::uint8_t>(n + 1);
    p[n + 1] = 0;
    for (std::size_t x = 0; x < 2 * n; ++x) p[lift(x)] = static_cast<std::uint8_t>(lift(partner_[x]));
    return TLDiagram(std::move(p));
  }

  /// Adds a through-strand on the right.
  TLDiagram extend() const {
    const std::size_t n = strands();
    auto lift = [n](std::size_t x) { return x < n ? x : x + 1; };
    std::vector<std::uint8_t> p(2 * n + 2);
    p[n] = static_cast<std::uint8_t>(2 * n + 1);
    p[2 * n + 1] = static_cast<std::uint8_t>(n);
    for (std::size_t x = 0; x < 2 * n; ++x) p[lift(x)] = static_cast<std::uint8_t>(lift(partner_[x]));
    return TLDiagram(std::move(p));
  }

  /// Number of loops formed by joining top i to bottom i.
  int closure_loops() const {
    const std::size_t n = strands();
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (std::size_t start = 0; start < 2 * n; ++start) {
      if (seen[start]) continue;
      ++loops;
      std::size_t x = start;
      while (!seen[x]) {
        seen[x] = true;
        const std::size_t y = partner_[x];
        seen[y] = true;
        x = y < n ? y + n : y - n;
      }
    }
    return loops;
  }

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

 private:
  std::vector<std::uint8_t> partner_;
};

/// Concatenation a.b: the bottom of a is glued to the top of b. Returns the
/// resulting diagram and the number of closed loops.
inline std::pair<TLDiagram, int> concatenate(const TLDiagram& a, const TLDiagram& b) {
  const std::size_t n = a.strands();
  if (b.strands() != n) throw Error(ErrorKind::StrandMismatch, "diagrams have different strand counts");
  const auto& pa = a.partner();
  const auto& pb = b.partner();
  std::vector<std::uint8_t> out(2 * n);
  std::vector<bool> middle(n, false);

  // Walks from a point of a (in_a) or b, returns the outer endpoint in result numbering.
  auto walk = [&](bool in_a, std::size_t q) -> std::size_t {
    for (;;) {
      if (in_a) {
        if (q < n) return q;
        const std::size_t k = q - n;
        middle[k] = true;
        q = pb[k];
        in_a = false;
      } else {
        if (q >= n) return q;
        middle[q] = true;
        q = pa[n + q];
        in_a = true;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>(walk(true, pa[i]));
    out[n + i] = static_cast<std::uint8_t>(walk(false, pb[n + i]));
  }
  int loops = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (middle[k]) continue;
    ++loops;
    std::size_t m = k;
    while (!middle[m]) {
      middle[m] = true;
      const std::size_t up = pa[n + m];  // partner of middle m inside a: a bottom point
      middle[up - n] = true;
      m = pb[up - n];  // continue inside b from the other middle point: a top point of b
    }
  }
  return {TLDiagram(std::move(out)), loops};
}

/// All noncrossing pairings on n strands, in a fixed recursive order.
inline std::vector<TLDiagram> all_diagrams(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<std::size_t> point_at(m);  // circle position -> point
  for (std::size_t p = 0; p < m; ++p) point_at[p < n ? p : 3 * n - 1 - p] = p;
  using Matching = std::vector<std::pair<std::size_t, std::size_t>>;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Matching>> memo;
  // noncrossing matchings of circle positions [lo, hi)
  std::function<const std::vector<Matching>&(std::size_t, std::size_t)> match =
      [&](std::size_t lo, std::size_t hi) -> const std::vector<Matching>& {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Matching> res;
    if (lo == hi) {
      res.emplace_back();
    } else {
      for (std::size_t k = lo + 1; k < hi; k += 2) {
        const auto inner = match(lo + 1, k);
        const auto outer = match(k + 1, hi);
        for (const auto& a : inner)
          for (const auto& b : outer) {
            Matching mm{{lo, k}};
            mm.insert(mm.end(), a.begin(), a.end());
            mm.insert(mm.end(), b.begin(), b.end());
            res.push_back(std::move(mm));
          }
      }
    }
    return memo.emplace(key, std::move(res)).first->second;
  };
  std::vector<TLDiagram> out;
  for (const auto& mm : match(0, m)) {
    std::vector<std::uint8_t> partner(m);
    for (auto [a, b] : mm) {
      partner[point_at[a]] = static_cast<std::uint8_t>(point_at[b]);
      partner[point_at[b]] = static_cast<std::uint8_t>(point_at[a]);
    }
    out.emplace_back(std::move(partner));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

class TLElement {
 public:
  using Terms = std::map<TLDiagram, cplx>;

  TLElement() = default;
  TLElement(std::size_t n, double delta) : n_(n), delta_(delta) {}
  TLElement(std::size_t n, double delta, const TLDiagram& d, cplx c = 1.0) : n_(n), delta_(delta) {
    if (d.strands() != n) throw Error(ErrorKind::StrandMismatch, "diagram does not match strand count");
    terms_[d] = c;
  }

  static TLElement identity(std::size_t n, double delta) { return {n, delta, TLDiagram::identity(n)}; }

  /// E_i = (cup-cap)_i / delta, a projection.
  static TLElement E(std::size_t n, std::size_t i, double delta) {
    return {n, delta, TLDiagram::cupcap(n, i), 1.0 / delta};
  }

  std::size_t strands() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  cplx coefficient(const TLDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? cplx(0.0) : it->second;
  }

  void add(const TLDiagram& d, cplx c) {
    if (c == cplx(0.0)) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx(0.0)) terms_.erase(it);
    }
  }

  TLElement& operator+=(const TLElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  TLElement& operator-=(const TLElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  TLElement& operator*=(cplx s) {
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }

  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, cplx s) { return a *= s; }
  friend TLElement operator*(cplx s, TLElement a) { return a *= s; }

  friend TLElement operator*(const TLElement& a, const TLElement& b) {
    a.check_compatible(b);
    TLElement out(a.n_, a.delta_);
    std::vector<double> powers{1.0};
    for (const auto& [da, ca] : a.terms_) {
      for (const auto& [db, cb] : b.terms_) {
        auto [d, loops] = concatenate(da, db);
        while (powers.size() <= static_cast<std::size_t>(loops)) powers.push_back(powers.back() * a.delta_);
        out.add(d, ca * cb * powers[loops]);
      }
    }
    return out;
  }

  TLElement adjoint() const {
    TLElement out(n_, delta_);
    for (const auto& [d, c] : terms_) out.add(d.reflect(), std::conj(c));
    return out;
  }

  /// Embeds into n+1 strands with the new strand on the left.
  TLElement shift() const {
    TLElement out(n_ + 1, delta_);
    for (const auto& [d, c] : terms_) out.add(d.shift(), c);
    return out;
  }

  /// Embeds into n+1 strands with the new strand on the right.
  TLElement extend() const {
    TLElement out(n_ + 1, delta_);
    for (const auto& [d, c] : terms_) out.add(d.extend(), c);
    return out;
  }

  double max_coefficient() const {
    double m = 0.0;
    for (const auto& [d, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Max coefficient difference.
  double distance(const TLElement& o) const { return (*this - o).max_coefficient(); }

 private:
  void check_compatible(const TLElement& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::StrandMismatch, "elements have different strand counts");
    if (delta_ != o.delta_) throw Error(ErrorKind::StrandMismatch, "elements have different loop parameters");
  }

  std::size_t n_ = 0;
  double delta_ = 2.0;
  Terms terms_;
};

inline TLElement tl_multiply(const TLElement& a, const TLElement& b) { return a * b; }

/// tr(D) = delta^(loops of the closure - n), so tr(1) = 1.
inline cplx markov_trace(const TLElement& x) {
  cplx acc = 0.0;
  const int n = static_cast<int>(x.strands());
  for (const auto& [d, c] : x.terms()) acc += c * std::pow(x.delta(), d.closure_loops() - n);
  return acc;
}

/// Gram matrix tr(D_a* D_b) over all diagrams on n strands.
inline MatrixR gram_matrix(std::size_t n, double delta) {
  const auto basis = all_diagrams(n);
  const std::size_t m = basis.size();
  MatrixR g(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    const TLDiagram ra = basis[a].reflect();
    for (std::size_t b = a; b < m; ++b) {
      auto [d, loops] = concatenate(ra, basis[b]);
      g(a, b) = g(b, a) = std::pow(delta, loops + d.closure_loops() - static_cast<int>(n));
    }
  }
  return g;
}

inline double gram_min_eigenvalue(std::size_t n, double delta) {
  Eigen::SelfAdjointEigenSolver<MatrixR> es(gram_matrix(n, delta), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// Hecke parameters and Jones-Wenzl projectors
// ---------------------------------------------------------------------------

struct HeckeParams {
  int q = 0;  // 0 encodes q = infinity
  double alpha = 0.0;
  cplx t = 1.0;  // e^{2 i alpha}
  double delta = 2.0;
  double tau = 0.25;

  bool infinite() const noexcept { return q == 0; }
  cplx eigenvalue_ratio() const { return -t; }  // lambda1 / lambda2
};

inline HeckeParams hecke_from_alpha(double alpha, int q = -1) {
  HeckeParams h;
  h.q = q;
  h.alpha = alpha;
  h.t = std::polar(1.0, 2.0 * alpha);
  h.delta = 2.0 * std::cos(alpha);
  h.tau = 1.0 / (h.delta * h.delta);
  return h;
}

/// alpha = sign * pi / q; q = 0 gives alpha = 0.
inline HeckeParams hecke_params(int q, int sign = +1) {
  if (q != 0 && q < 4) throw Error(ErrorKind::InvalidInput, "q must be >= 4 or infinite");
  return hecke_from_alpha(q == 0 ? 0.0 : sign * std::numbers::pi / q, q);
}

struct JonesWenzlResult {
  TLElement projector;
  bool cutoff = false;  // sin(m alpha) vanished: projector is the degenerate shift of the previous one
};

inline double wenzl_coefficient(std::size_t n, double alpha) {
  if (alpha == 0.0) return 2.0 * static_cast<double>(n) / static_cast<double>(n + 1);
  return 2.0 * std::cos(alpha) * std::sin(static_cast<double>(n) * alpha) /
         std::sin(static_cast<double>(n + 1) * alpha);
}

/// p_1 = 1, p_{n+1} = rho(p_n) - c_n rho(p_n) E_1 rho(p_n), with rho the
/// shift adding a strand on the left and c_n = 2cos(a) sin(n a) / sin((n+1) a).
inline JonesWenzlResult jones_wenzl(std::size_t m, const HeckeParams& h) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "Jones-Wenzl projector needs at least one strand");
  TLElement p = TLElement::identity(1, h.delta);
  for (std::size_t n = 1; n < m; ++n) {
    TLElement rp = p.shift();
    if (h.alpha != 0.0 && std::abs(std::sin(static_cast<double>(n + 1) * h.alpha)) < 1e-12)
      return {rp, true};
    const double c = wenzl_coefficient(n, h.alpha);
    const TLElement e = TLElement::E(n + 1, 1, h.delta);
    p = rp - c * ((rp * e) * rp);
  }
  return {p, false};
}

/// tr(p_m) from Delta_0 = 1, Delta_1 = delta, Delta_{k+1} = delta Delta_k - Delta_{k-1}: Delta_m / delta^m.
inline double jones_wenzl_trace_closed_form(std::size_t m, double delta) {
  double prev = 1.0, cur = delta;
  if (m == 0) return 1.0;
  for (std::size_t k = 1; k < m; ++k) {
    const double next = delta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur / std::pow(delta, static_cast<double>(m));
}

// ---------------------------------------------------------------------------
// Braid generators
// ---------------------------------------------------------------------------

/// g_k = lambda1 (1 - E_k) + lambda2 E_k with lambda1 = -t lambda2.
inline TLElement braid_generator(std::size_t n, std::size_t k, const HeckeParams& h, cplx lambda2 = 1.0,
                                 bool inverse = false) {
  cplx l1 = -h.t * lambda2, l2 = lambda2;
  if (inverse) {
    l1 = 1.0 / l1;
    l2 = 1.0 / l2;
  }
  const TLElement id = TLElement::identity(n, h.delta);
  const TLElement e = TLElement::E(n, k, h.delta);
  return l1 * (id - e) + l2 * e;
}

/// lambda_rho = tr(g_1) on two strands.
inline cplx statistics_parameter(const HeckeParams& h, cplx lambda2 = 1.0) {
  return -h.t * lambda2 * (1.0 - h.tau) + lambda2 * h.tau;
}

/// Word letters are +-k for g_k^{+-1} (1-based). Strand count defaults to max|k| + 1.
inline TLElement braid_word_element(const std::vector<int>& word, const HeckeParams& h, std::size_t strands = 0,
                                    cplx lambda2 = 1.0) {
  std::size_t need = 1;
  for (int k : word) {
    if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "braid generator index 0");
    need = std::max(need, static_cast<std::size_t>(std::abs(k)) + 1);
  }
  if (strands == 0) strands = need;
  if (need > strands) throw Error(ErrorKind::IndexOutOfRange, "braid generator exceeds strand count");
  TLElement x = TLElement::identity(strands, h.delta);
  for (int k : word) x = x * braid_generator(strands, static_cast<std::size_t>(std::abs(k)), h, lambda2, k < 0);
  return x;
}

inline cplx braid_markov_trace(const std::vector<int>& word, const HeckeParams& h, std::size_t strands = 0,
                               cplx lambda2 = 1.0) {
  return markov_trace(braid_word_element(word, h, strands, lambda2));
}

/// Left regular representation of x on the diagram basis (column b = x D_b).
inline MatrixC left_regular_matrix(const TLElement& x) {
  const auto basis = all_diagrams(x.strands());
  std::map<TLDiagram, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  MatrixC m = MatrixC::Zero(basis.size(), basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const TLElement prod = x * TLElement(x.strands(), x.delta(), basis[b]);
    for (const auto& [d, c] : prod.terms()) m(index.at(d), b) += c;
  }
  return m;
}

}  // namespace sectorkit
