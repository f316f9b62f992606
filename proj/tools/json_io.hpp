#pragma once

#include <cstdio>
#include <initializer_list>
#include <set>
#include <string>

#include <json.hpp>

#include <sectorkit/sectorkit.hpp>

namespace sectorkit::io {

using nlohmann::json;

inline constexpr const char* kSchema = "sector-kit/1";

/// Rounds to 15 significant digits so output is stable across platforms.
inline json num(double x) {
  if (x == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

inline json num(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

inline json matrix(const MatrixC& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(num(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json tensor(const Tensor3& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.rank(); ++i) {
    json a = json::array();
    for (std::size_t j = 0; j < t.rank(); ++j) {
      json b = json::array();
      for (std::size_t l = 0; l < t.rank(); ++l) b.push_back(t(i, j, l));
      a.push_back(b);
    }
    out.push_back(a);
  }
  return out;
}

/// Integers stay integers; proper fractions are written "p/q".
inline json rational(const Rational& r) {
  if (r.den() == 1) return r.num();
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

/// Rejects keys outside the allowed set and checks the optional schema tag.
inline void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, what + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  ok.insert("schema");
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw Error(ErrorKind::InvalidInput, "unknown field '" + key + "' in " + what);
  if (j.contains("schema") && j["schema"] != kSchema)
    throw Error(ErrorKind::InvalidInput, "unsupported schema tag " + j["schema"].dump());
}

inline cplx parse_complex(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::InvalidInput, "complex numbers are written as [re, im]");
}

inline IntMatrix parse_int_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, what + " must be a list of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidInput, what + " must be a list of rows");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorKind::InvalidInput, what + " entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

inline std::vector<Permutation> parse_generators(const json& j) {
  std::vector<Permutation> gens;
  for (const auto& row : parse_int_matrix(j, "generators")) {
    Permutation p;
    for (auto v : row) p.images.push_back(static_cast<int>(v));
    gens.push_back(std::move(p));
  }
  return gens;
}

inline MultiMatrixAlgebra parse_algebra(const json& j, const std::string& what) {
  MultiMatrixAlgebra a;
  for (const auto& row : parse_int_matrix(j, what)) {
    if (row.size() != 2) throw Error(ErrorKind::InvalidInput, what + " blocks are [size, multiplicity]");
    a.blocks.push_back({row[0], row[1]});
  }
  return a;
}

inline ModularData parse_modular(const json& j) {
  require_keys(j, {"labels", "S", "kappa"}, "modular data");
  for (const char* k : {"labels", "S", "kappa"})
    if (!j.contains(k)) throw Error(ErrorKind::InvalidInput, std::string("modular data needs '") + k + "'");
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  const std::size_t n = labels.size();
  const json& s = j["S"];
  if (!s.is_array() || s.size() != n) throw Error(ErrorKind::InvalidInput, "S must have one row per label");
  MatrixC S(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!s[r].is_array() || s[r].size() != n) throw Error(ErrorKind::InvalidInput, "S must be square");
    for (std::size_t c = 0; c < n; ++c) S(r, c) = parse_complex(s[r][c]);
  }
  std::vector<cplx> kappa;
  for (const auto& k : j["kappa"]) kappa.push_back(parse_complex(k));
  return make_modular_data(std::move(labels), std::move(S), std::move(kappa));
}

inline json modular_json(const ModularData& md) {
  json k = json::array();
  for (auto z : md.kappa) k.push_back(num(z));
  return {{"labels", md.labels}, {"S", matrix(md.S)}, {"kappa", k}};
}

}  // namespace sectorkit::io
