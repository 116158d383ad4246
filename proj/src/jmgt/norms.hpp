// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_NORMS_HPP
#define JMGT_NORMS_HPP

#include <cmath>
#include <vector>

#include "fourier.hpp"
#include "model.hpp"

namespace jmgt
{

// |d_t^k u|^2_{L^2(0,T;X)} = T sum_m w_m (m omega)^{2k} |u_m|_X^2 with w_0 = 1,
// w_m = 2 otherwise. `spatial_sq` returns |v|_X^2 for a complex nodal vector.
template <class SpatialSq>
double parseval_squared(const HarmonicField &u, double period, int order, SpatialSq &&spatial_sq)
{
  const double omega = kTwoPi / period;
  double s = 0.0;
  for (int m = 0; m <= u.harmonics(); ++m)
  {
    const double weight = m == 0 ? 1.0 : 2.0;
    const double factor = order == 0 ? 1.0 : std::pow(m * omega, 2 * order);
    if (factor == 0.0)
      continue;
    s += weight * factor * spatial_sq(u[m]);
  }
  return period * s;
}

// Per-harmonic spatial building blocks shared by all time-space norms.
struct HarmonicSpatialData
{
  std::vector<double> l2;        // |u_m|^2_{L2}
  std::vector<double> h1_semi;   // |u_m'|^2_{L2}
  std::vector<double> laplace;   // |u_m''|^2_{L2}
};

HarmonicSpatialData spatial_data(const HarmonicField &u, const Grid &grid);

// sum_m w_m (m omega)^{2k} values[m], times T.
double parseval_from(const std::vector<double> &values, double period, int order);

// |u|_{L2(0,T;L2)}.
double l2l2_norm(const HarmonicField &u, const Model &model);

// Discrete H^2(0,T;L2) + H^1(0,T;H^1) norm (tau-independent low-order space).
double u0_lo_norm(const HarmonicField &u, const Model &model);

// Discrete H^2(0,T;H^1) + H^1(0,T;H^2_Delta) norm (tau-independent medium-order space).
double u0_me_norm(const HarmonicField &u, const Model &model);

}  // namespace jmgt

#endif  // JMGT_NORMS_HPP
