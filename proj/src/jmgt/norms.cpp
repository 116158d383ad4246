// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "norms.hpp"

#include "spatial.hpp"

namespace jmgt
{

HarmonicSpatialData spatial_data(const HarmonicField &u, const Grid &grid)
{
  HarmonicSpatialData d;
  const double h = grid.spacing();
  for (int m = 0; m <= u.harmonics(); ++m)
  {
    d.l2.push_back(l2_squared(u[m], grid));
    d.h1_semi.push_back(l2_squared(gradient(u[m], h), grid));
    d.laplace.push_back(l2_squared(second_derivative(u[m], h), grid));
  }
  return d;
}

double parseval_from(const std::vector<double> &values, double period, int order)
{
  const double omega = kTwoPi / period;
  double s = 0.0;
  for (std::size_t m = 0; m < values.size(); ++m)
  {
    const double weight = m == 0 ? 1.0 : 2.0;
    const double factor = order == 0 ? 1.0 : std::pow(static_cast<double>(m) * omega, 2 * order);
    s += weight * factor * values[m];
  }
  return period * s;
}

double l2l2_norm(const HarmonicField &u, const Model &model)
{
  return std::sqrt(parseval_squared(u, model.params.period, 0,
                                    [&](const CVector &v) { return l2_squared(v, model.grid); }));
}

double u0_lo_norm(const HarmonicField &u, const Model &model)
{
  const auto d = spatial_data(u, model.grid);
  const double T = model.params.period;
  double s = 0.0;
  for (int k = 0; k <= 2; ++k)
    s += parseval_from(d.l2, T, k);
  for (int k = 0; k <= 1; ++k)
    s += parseval_from(d.l2, T, k) + parseval_from(d.h1_semi, T, k);
  return std::sqrt(s);
}

double u0_me_norm(const HarmonicField &u, const Model &model)
{
  const auto d = spatial_data(u, model.grid);
  const double T = model.params.period;
  double s = 0.0;
  for (int k = 0; k <= 2; ++k)
    s += parseval_from(d.l2, T, k) + parseval_from(d.h1_semi, T, k);
  for (int k = 0; k <= 1; ++k)
    s += parseval_from(d.l2, T, k) + parseval_from(d.h1_semi, T, k) + parseval_from(d.laplace, T, k);
  return std::sqrt(s);
}

}  // namespace jmgt
