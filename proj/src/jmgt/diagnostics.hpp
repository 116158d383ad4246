// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_DIAGNOSTICS_HPP
#define JMGT_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "fourier.hpp"
#include "model.hpp"

namespace jmgt
{

struct EnergyTerm
{
  std::string name;
  double value = 0.0;
};

struct EnergyLevel
{
  std::vector<EnergyTerm> terms;
  double total = 0.0;

  void add(std::string name, double value);
  double operator[](const std::string &name) const;
};

struct EnergyReport
{
  EnergyLevel lo;
  EnergyLevel me;
  EnergyLevel hi;

  double bar_me() const { return me.total + lo.total; }
  double bar_hi() const { return hi.total + me.total + lo.total; }
};

// Low, medium and high level energies of a periodic state. Time norms by
// Parseval, space norms by trapezoid quadrature, dual norms through
// (I - Delta_h)^{-1}; boundary terms from endpoint traces.
EnergyReport compute_energies(const HarmonicField &u, const Model &model);

struct Multipliers
{
  double sigma = 0.0;
  double rho = 0.0;
};

// sigma = min 1/2 (taubar c2/b + 1), rho at half of its admissible bound.
// Throws StabilityViolation when the multiplier inequalities cannot hold.
Multipliers choose_multipliers(const PhysicalParams &params);

// |right-hand side| of the low order energy identity with alpha = 1 and the
// test function taubar u_tt + sigma u_t + rho u.
double energy_identity_residual(const HarmonicField &u, const HarmonicField &rtilde,
                                const Multipliers &mult, const Model &model);

struct NamedValue
{
  std::string name;
  double value = 0.0;
};

// Raw coefficient regularity norms; alpha = 1 so its entries are zero.
std::vector<NamedValue> coefficient_smallness_report(const PhysicalParams &params, const Grid &grid);

struct EstimateSample
{
  double tau = 0.0;
  HarmonicField u;
  HarmonicField rtilde_grad;  // the part recorded as f
  HarmonicField rtilde_time;  // the part recorded as the nonlinearity
};

struct EstimateRow
{
  double tau = 0.0;
  double lo = 0.0;  // NaN when the right-hand side vanishes
  double me = 0.0;
  double hi = 0.0;
};

struct EstimateRatioTable
{
  std::vector<EstimateRow> rows;
  double spread_lo = 0.0;  // max/min over defined rows
  double spread_me = 0.0;
  double spread_hi = 0.0;
};

EstimateRow estimate_ratios(const EstimateSample &sample, const Model &model);

EstimateRatioTable estimate_ratio_report(const std::vector<EstimateSample> &samples, const Model &model);

}  // namespace jmgt

#endif  // JMGT_DIAGNOSTICS_HPP
