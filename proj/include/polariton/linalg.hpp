#pragma once

#include <cmath>

#include "polariton/common.hpp"

namespace polariton {

// Kronecker product, first factor slowest (index = i_a * rows(b) + i_b).
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// annihilation operator on a `levels`-state truncated Fock space
inline Mat boson_annihilation(int levels) {
  Mat b = Mat::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) b(n - 1, n) = std::sqrt(double(n));
  return b;
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// largest-|entry| phase removed; comparison helper for unitaries that may
// differ by a global phase
inline double max_abs_diff_up_to_phase(const Mat& a, const Mat& b) {
  Eigen::Index imax = 0, jmax = 0;
  a.cwiseAbs().maxCoeff(&imax, &jmax);
  cplx za = a(imax, jmax), zb = b(imax, jmax);
  if (std::abs(za) < 1e-14 || std::abs(zb) < 1e-14) return max_abs(a - b);
  cplx phase = (zb / std::abs(zb)) / (za / std::abs(za));
  return max_abs(a * phase - b);
}

}  // namespace polariton
