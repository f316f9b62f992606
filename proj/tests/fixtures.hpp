#pragma once

#include <sectorkit/group.hpp>

namespace fixtures {

using sectorkit::Permutation;

struct NamedGroup {
  const char* name;
  std::size_t degree;
  std::vector<Permutation> gens;
  std::size_t order;
};

inline NamedGroup s3() { return {"S3", 3, {{{1, 0, 2}}, {{1, 2, 0}}}, 6}; }
inline NamedGroup z4() { return {"Z4", 4, {{{1, 2, 3, 0}}}, 4}; }
inline NamedGroup s4() { return {"S4", 4, {{{1, 0, 2, 3}}, {{1, 2, 3, 0}}}, 24}; }
inline NamedGroup d4() { return {"D4", 4, {{{1, 2, 3, 0}}, {{0, 3, 2, 1}}}, 8}; }
inline NamedGroup a4() { return {"A4", 4, {{{1, 2, 0, 3}}, {{0, 2, 3, 1}}}, 12}; }
// left multiplication by i and j on {1, -1, i, -i, j, -j, k, -k}
inline NamedGroup q8() { return {"Q8", 8, {{{2, 3, 1, 0, 6, 7, 5, 4}}, {{4, 5, 7, 6, 1, 0, 2, 3}}}, 8}; }
inline NamedGroup z2() { return {"Z2", 2, {{{1, 0}}}, 2}; }

inline std::vector<NamedGroup> zoo() { return {s3(), s4(), d4(), q8(), a4(), z4()}; }

inline sectorkit::FiniteGroupData build(const NamedGroup& g) { return sectorkit::enumerate_group(g.degree, g.gens); }

}  // namespace fixtures
