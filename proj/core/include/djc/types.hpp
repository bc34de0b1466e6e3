#pragma once

#include <complex>

#include <Eigen/Dense>

namespace djc {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr Complex imag_unit{0.0, 1.0};

}  // namespace djc
