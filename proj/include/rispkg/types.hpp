// SPDX-License-Identifier: Apache-2.0
//
// ris-pkg: simulation of physical-layer key generation over RIS-reconfigurable channels.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace rispkg {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Requested SNR in dB to a linear power ratio.
inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace rispkg
