#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace polariton {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

constexpr double kBohrPerAngstrom = 1.8897259886;
constexpr double kPi = 3.14159265358979323846;

// exit-code families used by the CLI (0 = success)
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double angstrom_to_bohr(double a) { return a * kBohrPerAngstrom; }

}  // namespace polariton
