#pragma once

// Sectors and modular data of the quantum double D(G).

#include <string>
#include <vector>

#include "group.hpp"
#include "modular.hpp"

namespace sectorkit {

struct DoubleSector {
  std::size_t class_index = 0;
  std::size_t centralizer_irrep = 0;
  std::int64_t qdim = 0;  // |K| * dim(pi)
};

namespace detail {

struct CentralizerData {
  FiniteGroupData group;
  ConjugacyData classes;
  CharacterTable characters;
};

struct DoubleContext {
  GroupAnalysis g;
  std::vector<CentralizerData> centralizers;  // per class representative
  std::vector<DoubleSector> sectors;
};

inline DoubleContext build_double(const FiniteGroupData& group) {
  DoubleContext ctx{analyze_group(group), {}, {}};
  const auto& cd = ctx.g.classes;
  std::int64_t total = 0;
  for (std::size_t a = 0; a < cd.class_count(); ++a) {
    CentralizerData c;
    c.group = centralizer(ctx.g.group, cd.reps[a]);
    c.classes = conjugacy_classes(c.group);
    c.characters = character_table(c.group, c.classes, class_fusion(c.group, c.classes));
    for (std::size_t al = 0; al < c.characters.size(); ++al) {
      DoubleSector s{a, al, static_cast<std::int64_t>(cd.sizes[a]) * c.characters.dims[al]};
      total += s.qdim * s.qdim;
      ctx.sectors.push_back(s);
    }
    ctx.centralizers.push_back(std::move(c));
  }
  const auto order = static_cast<std::int64_t>(group.order());
  if (total != order * order)
    throw Error(ErrorKind::DimensionIdentityFailure,
                "sum of squared sector dimensions " + std::to_string(total) + " != |G|^2");
  return ctx;
}

}  // namespace detail

/// Sectors (class, centralizer irrep), ordered by class then irrep.
inline std::vector<DoubleSector> enumerate_double_sectors(const FiniteGroupData& group) {
  return detail::build_double(group).sectors;
}

/// S_{(a,al),(b,be)} = 1/|G| sum_{g in K_a, h in K_b, gh = hg} conj(chi_al(x_g^-1 h x_g)) conj(chi_be(y_h^-1 g y_h)),
/// T_{(a,al)} = chi_al(a) / chi_al(e), where g = x_g a x_g^-1.
inline ModularData double_modular_data(const FiniteGroupData& group) {
  const auto ctx = detail::build_double(group);
  const auto& G = ctx.g.group;
  const auto& cd = ctx.g.classes;
  const std::size_t r = cd.class_count();

  // conjugator[g]: some x with x rep x^-1 = g
  std::vector<std::size_t> conjugator(G.order(), 0);
  std::vector<bool> found(G.order(), false);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t x = 0; x < G.order(); ++x) {
      const std::size_t g = G.mult(G.mult(x, cd.reps[a]), G.inverse(x));
      if (!found[g]) {
        found[g] = true;
        conjugator[g] = x;
      }
    }
  }
  // class, inside C(rep of class_of[g]), of x_g^-1 h x_g
  auto centralizer_class = [&](std::size_t g, std::size_t h) {
    const std::size_t x = conjugator[g];
    const std::size_t moved = G.mult(G.mult(G.inverse(x), h), x);
    const auto& c = ctx.centralizers[cd.class_of[g]];
    return c.classes.class_of[c.group.index_of(G.elements[moved])];
  };

  const std::size_t n = ctx.sectors.size();
  MatrixC S = MatrixC::Zero(n, n);
  const double order = static_cast<double>(G.order());
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t g : cd.members[a])
        for (std::size_t h : cd.members[b])
          if (G.mult(g, h) == G.mult(h, g)) pairs.emplace_back(centralizer_class(g, h), centralizer_class(h, g));
      for (std::size_t p = 0; p < n; ++p) {
        if (ctx.sectors[p].class_index != a) continue;
        const auto& chi_a = ctx.centralizers[a].characters.chi;
        for (std::size_t q = 0; q < n; ++q) {
          if (ctx.sectors[q].class_index != b) continue;
          const auto& chi_b = ctx.centralizers[b].characters.chi;
          cplx acc = 0.0;
          for (const auto& [ca, cb] : pairs)
            acc += std::conj(chi_a(ctx.sectors[p].centralizer_irrep, ca)) *
                   std::conj(chi_b(ctx.sectors[q].centralizer_irrep, cb));
          S(p, q) = acc / order;
        }
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<cplx> kappa;
  for (const auto& s : ctx.sectors) {
    const auto& c = ctx.centralizers[s.class_index];
    const std::size_t rep_cls = c.classes.class_of[c.group.index_of(G.elements[cd.reps[s.class_index]])];
    const cplx theta = c.characters.chi(s.centralizer_irrep, rep_cls) / c.characters.chi(s.centralizer_irrep, 0);
    kappa.push_back(theta / std::abs(theta));
    labels.push_back("K" + std::to_string(s.class_index) + ":pi" + std::to_string(s.centralizer_irrep));
  }
  return make_modular_data(std::move(labels), std::move(S), std::move(kappa));
}

}  // namespace sectorkit
