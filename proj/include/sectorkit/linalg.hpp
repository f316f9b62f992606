#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace sectorkit {

using cplx = std::complex<double>;
using MatrixC = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixR = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorC = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using VectorR = Eigen::Matrix<double, Eigen::Dynamic, 1>;

/// Dense r x r x r tensor of nonnegative integers, row-major in (i, j, l).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t r) : r_(r), data_(r * r * r, 0) {}

  std::size_t rank() const noexcept { return r_; }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t l) { return data_[(i * r_ + j) * r_ + l]; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return data_[(i * r_ + j) * r_ + l]; }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::int64_t> data_;
};

inline double max_abs(const MatrixC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Largest singular value.
inline double operator_norm(const MatrixC& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixC> svd(m);
  return svd.singularValues()(0);
}

inline double operator_norm(const MatrixR& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixR> svd(m);
  return svd.singularValues()(0);
}

}  // namespace sectorkit
