// types.hpp — Matrix/vector aliases and index conventions for the three-level system
//
// Basis order is (|0>, |1>, |2>) = (excited, ground+, ground-). Density matrices
// are vectorized row-major: rho_vec = (rho00, rho01, rho02, rho10, rho11, rho12,
// rho20, rho21, rho22). All superoperators use this convention.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cptlab {

using Complex = std::complex<double>;

using DensityMatrix = Eigen::Matrix3cd;
using PureState = Eigen::Vector3cd;
using VectorizedState = Eigen::Matrix<Complex, 9, 1>;
using Superoperator = Eigen::Matrix<Complex, 9, 9>;

inline constexpr Complex kImag{0.0, 1.0};

// Row-major flat index of the (row, col) entry of a 3x3 matrix.
constexpr int flat_index(int row, int col) noexcept { return 3 * row + col; }

} // namespace cptlab
