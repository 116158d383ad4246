// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_TYPES_HPP
#define JMGT_TYPES_HPP

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace jmgt
{

using Complex = std::complex<double>;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Which quadratic nonlinearity closes the MGT operator.
//   Westervelt:  eta (u^2)_tt
//   Kuznetsov:   (eta_tilde u_t^2 + |grad u|^2)_t
enum class EquationKind
{
  Linear,
  Westervelt,
  Kuznetsov,
};

}  // namespace jmgt

#endif  // JMGT_TYPES_HPP
