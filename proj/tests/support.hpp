// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_TESTS_SUPPORT_HPP
#define JMGT_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "fourier.hpp"
#include "model.hpp"

namespace jmgt::test
{

inline Model base_model(int nodes = 65, int harmonics = 4, double tau = 0.1, double taubar = 0.5)
{
  ConstantCoefficients c;
  c.nodes = nodes;
  c.harmonics = harmonics;
  c.tau = tau;
  c.taubar = taubar;
  return make_model(c);
}

inline RVector sine_profile(const Grid &g, double k = 1.0)
{
  return (k * M_PI / g.length * g.coordinates().array()).sin();
}

// Monochromatic forcing a * profile at harmonic 1.
inline HarmonicField drive(const Model &m, double a, const RVector &profile)
{
  HarmonicField f(m.harmonics, m.grid.nodes);
  f[1] = (a * profile).cast<Complex>();
  return f;
}

inline HarmonicField random_field(int harmonics, int nodes, unsigned seed, bool zero_ends = false)
{
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  HarmonicField u(harmonics, nodes);
  for (int m = 0; m <= harmonics; ++m)
    for (int j = 0; j < nodes; ++j)
      u[m][j] = Complex(dist(gen), m == 0 ? 0.0 : dist(gen));
  if (zero_ends)
    for (int m = 0; m <= harmonics; ++m)
    {
      u[m][0] = 0.0;
      u[m][nodes - 1] = 0.0;
    }
  return u;
}

// Real reconstruction u(t) = u_0 + sum_m 2 Re(u_m e^{i m w t}), evaluated directly.
inline double reconstruct(const HarmonicField &u, int node, double t, double omega)
{
  double v = u[0][node].real();
  for (int m = 1; m <= u.harmonics(); ++m)
    v += 2.0 * (u[m][node] * std::exp(Complex(0.0, m * omega * t))).real();
  return v;
}

inline double max_abs_diff(const HarmonicField &a, const HarmonicField &b)
{
  return (a - b).max_abs();
}

inline double slope(double x0, double y0, double x1, double y1)
{
  return std::log(y1 / y0) / std::log(x1 / x0);
}

}  // namespace jmgt::test

#endif  // JMGT_TESTS_SUPPORT_HPP
