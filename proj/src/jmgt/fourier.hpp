// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_FOURIER_HPP
#define JMGT_FOURIER_HPP

#include <vector>

#include <Eigen/Core>

#include "types.hpp"

namespace jmgt
{

// One-sided harmonic representation of a real T-periodic field,
//   u(t, x) = u_0(x) + sum_{m=1..M} 2 Re(u_m(x) exp(i m omega t)),
// with u_0 real. Negative harmonics are implied by conjugate symmetry.
class HarmonicField
{
public:
  HarmonicField() = default;
  HarmonicField(int harmonics, int nodes);

  static HarmonicField zeros(int harmonics, int nodes) { return HarmonicField(harmonics, nodes); }

  int harmonics() const { return static_cast<int>(coeffs_.size()) - 1; }
  int nodes() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.front().size()); }

  CVector &operator[](int m) { return coeffs_[m]; }
  const CVector &operator[](int m) const { return coeffs_[m]; }

  // Coefficient of harmonic k for any k in [-M, M] (conjugate for k < 0).
  Complex at(int k, int node) const
  {
    return k >= 0 ? coeffs_[k][node] : std::conj(coeffs_[-k][node]);
  }

  // Drops the imaginary part of the mean mode.
  void enforce_real_mean();

  // Copy truncated or zero-padded to order M.
  HarmonicField resized(int harmonics) const;

  // k-th time derivative: multiplies harmonic m by (i m omega)^k.
  HarmonicField time_derivative(double omega, int order = 1) const;

  // Sum of |u_m|^2 over all stored entries (plain Euclidean, no weights).
  double squared_coefficient_norm() const;
  double max_abs() const;

  HarmonicField &operator+=(const HarmonicField &o);
  HarmonicField &operator-=(const HarmonicField &o);
  HarmonicField &operator*=(double s);

  friend HarmonicField operator+(HarmonicField a, const HarmonicField &b) { return a += b; }
  friend HarmonicField operator-(HarmonicField a, const HarmonicField &b) { return a -= b; }
  friend HarmonicField operator*(double s, HarmonicField a) { return a *= s; }
  friend HarmonicField operator*(HarmonicField a, double s) { return a *= s; }

private:
  std::vector<CVector> coeffs_;
};

// Real samples u(t_k, x_j) on t_k = k T / Nt, k = 0..Nt-1. Row k holds time t_k.
struct TimeField
{
  Eigen::MatrixXd values;

  int samples() const { return static_cast<int>(values.rows()); }
  int nodes() const { return static_cast<int>(values.cols()); }
};

// Inverse transform (synthesis). Requires Nt >= 2M+2.
TimeField to_time_samples(const HarmonicField &u, int samples);

// Forward transform (analysis) truncated to order M. Requires Nt >= 2M+2.
HarmonicField to_harmonics(const TimeField &v, int harmonics);

// Sample count used for quadratic products: smallest power of two >= 4M+2.
int dealiased_samples(int harmonics);

}  // namespace jmgt

#endif  // JMGT_FOURIER_HPP
