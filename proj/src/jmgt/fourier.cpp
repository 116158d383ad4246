// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace jmgt
{

HarmonicField::HarmonicField(int harmonics, int nodes)
  : coeffs_(static_cast<std::size_t>(harmonics + 1), CVector::Zero(nodes))
{
}

void HarmonicField::enforce_real_mean()
{
  if (!coeffs_.empty())
    coeffs_[0] = coeffs_[0].real().cast<Complex>();
}

HarmonicField HarmonicField::resized(int harmonics) const
{
  HarmonicField out(harmonics, nodes());
  for (int m = 0; m <= std::min(harmonics, this->harmonics()); ++m)
    out[m] = coeffs_[m];
  return out;
}

HarmonicField HarmonicField::time_derivative(double omega, int order) const
{
  HarmonicField out = *this;
  for (int m = 0; m <= harmonics(); ++m)
    out[m] *= std::pow(Complex(0.0, m * omega), order);
  return out;
}

double HarmonicField::squared_coefficient_norm() const
{
  double s = 0.0;
  for (const auto &c : coeffs_)
    s += c.squaredNorm();
  return s;
}

double HarmonicField::max_abs() const
{
  double s = 0.0;
  for (const auto &c : coeffs_)
    if (c.size() > 0)
      s = std::max(s, c.cwiseAbs().maxCoeff());
  return s;
}

HarmonicField &HarmonicField::operator+=(const HarmonicField &o)
{
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    coeffs_[m] += o.coeffs_[m];
  return *this;
}

HarmonicField &HarmonicField::operator-=(const HarmonicField &o)
{
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    coeffs_[m] -= o.coeffs_[m];
  return *this;
}

HarmonicField &HarmonicField::operator*=(double s)
{
  for (auto &c : coeffs_)
    c *= s;
  return *this;
}

namespace
{

void require_samples(int samples, int harmonics)
{
  if (samples < 2 * harmonics + 2)
    throw Error(ErrorKind::UndersampledTime,
                "Nt = " + std::to_string(samples) + " < 2M+2 = " + std::to_string(2 * harmonics + 2));
}

// exp(i 2 pi k / Nt) for k = 0..Nt-1, from exact angle reduction.
std::vector<Complex> unit_roots(int samples)
{
  std::vector<Complex> roots(samples);
  for (int k = 0; k < samples; ++k)
    roots[k] = std::polar(1.0, kTwoPi * k / samples);
  return roots;
}

}  // namespace

TimeField to_time_samples(const HarmonicField &u, int samples)
{
  const int M = u.harmonics();
  require_samples(samples, M);
  const auto roots = unit_roots(samples);
  TimeField out;
  out.values.resize(samples, u.nodes());
  for (int k = 0; k < samples; ++k)
  {
    RVector row = u[0].real();
    for (int m = 1; m <= M; ++m)
      row += 2.0 * (u[m] * roots[(static_cast<long>(m) * k) % samples]).real();
    out.values.row(k) = row.transpose();
  }
  return out;
}

HarmonicField to_harmonics(const TimeField &v, int harmonics)
{
  const int Nt = v.samples();
  require_samples(Nt, harmonics);
  const auto roots = unit_roots(Nt);
  HarmonicField out(harmonics, v.nodes());
  for (int m = 0; m <= harmonics; ++m)
  {
    CVector acc = CVector::Zero(v.nodes());
    for (int k = 0; k < Nt; ++k)
    {
      const Complex phase = std::conj(roots[(static_cast<long>(m) * k) % Nt]);
      acc += phase * v.values.row(k).transpose().cast<Complex>();
    }
    out[m] = acc / static_cast<double>(Nt);
  }
  out.enforce_real_mean();
  return out;
}

int dealiased_samples(int harmonics)
{
  int n = 1;
  while (n < 4 * harmonics + 2)
    n *= 2;
  return n;
}

}  // namespace jmgt
