#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace tripod {

using Real = double;
using Complex = std::complex<Real>;

// Dense fixed-size complex types over a scalar; the library works in double.
template <typename Scalar>
using Mat4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<std::complex<Scalar>, 4, 1>;
template <typename Scalar>
using Mat16 = Eigen::Matrix<std::complex<Scalar>, 16, 16>;
template <typename Scalar>
using Vec16 = Eigen::Matrix<std::complex<Scalar>, 16, 1>;

using Matrix4c = Mat4<Real>;
using Vector4c = Vec4<Real>;
using Matrix16c = Mat16<Real>;
using Vector16c = Vec16<Real>;
using VectorXc = Eigen::VectorXcd;
using VectorXr = Eigen::VectorXd;

namespace constants {
inline constexpr Real hbar = 1.054571817e-34;       // J s
inline constexpr Real epsilon0 = 8.8541878128e-12;  // C^2 / (J m)
inline constexpr Real c_light = 2.99792458e8;       // m / s
inline constexpr Real pi = 3.14159265358979323846;
}  // namespace constants

// Physics-domain failure: pole proximity, degenerate detunings, ill-posed
// steady states. The CLI maps these to exit code 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: instability, non-convergence. CLI exit code 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tripod
