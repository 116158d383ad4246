// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_STUDIES_HPP
#define JMGT_STUDIES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourier.hpp"
#include "model.hpp"
#include "nonlinear.hpp"

namespace jmgt
{

enum class StudyKind
{
  Convergence,
  TauSweep,
  Taylor,
  OracleCompare,
};

std::string_view to_string(StudyKind kind) noexcept;

struct StudyResult
{
  StudyKind kind = StudyKind::Convergence;
  std::string label_column;  // empty when rows carry no label
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> row_hashes;
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::vector<double> values, std::string hash, std::string label = {});
  void set_meta(const std::string &key, const std::string &value);
  void set_meta(const std::string &key, double value);
  std::string meta(const std::string &key) const;
  int column(const std::string &name) const;
  double at(std::size_t row, const std::string &name) const;
  double at(const std::string &label, const std::string &name) const;
};

enum class ManufacturedCase
{
  LinearDirichlet,
  LinearImpedance,
  WesterveltDirichlet,
  KuznetsovDirichlet,
};

ManufacturedCase parse_case(std::string_view name);
std::string_view to_string(ManufacturedCase c) noexcept;
EquationKind equation_of(ManufacturedCase c) noexcept;

// Spatial profile of the impedance case: sin(k x) with k cos(kL) + gamma sin(kL) = 0.
double impedance_wavenumber(double length, double gamma);

struct Manufactured
{
  HarmonicField u_star;
  HarmonicField f;
};

// u*(t, x) = A cos(wt) phi(x); f chosen so that u* solves the equation exactly.
// The model's boundary conditions must match the case.
Manufactured manufactured_case(ManufacturedCase c, const Model &model, double amplitude = 1e-3);

struct ConvergenceOptions
{
  double amplitude = 1e-3;
  double order_low = 1.8;
  double order_high = 2.2;
  FixedPointOptions solver;
};

// Columns: nx, h, error_l2l2, error_h1, order_l2l2, order_h1.
StudyResult convergence_study(ManufacturedCase c, const Model &model, const std::vector<int> &grids,
                              const ConvergenceOptions &opts = {});

// Columns: tau, d_lo, d_me, rate, E_lo_ratio. The tau = 0 reference is
// solved through solve_state like every other row.
StudyResult tau_sweep(const Model &model, const HarmonicField &f, const std::vector<double> &taus,
                      EquationKind kind, const FixedPointOptions &opts = {});

struct TaylorOptions
{
  FixedPointOptions solver{1e-14, 200};
  double slope_target = 2.0;
  double slope_tolerance = 0.1;
};

// Columns: eps, remainder, slope. eps is absolute (eps_rel * |f|) along the
// unit-norm direction f_dir / |f_dir|.
StudyResult taylor_test(const Model &model, const HarmonicField &f, const HarmonicField &f_dir,
                        EquationKind kind, const std::vector<double> &eps_rel,
                        const TaylorOptions &opts = {});

struct OracleOptions
{
  int steps_per_period = 512;
  int max_periods = 200;
  double period_tol = 1e-8;
  int stage_max_iter = 50;
  double stage_tol = 1e-13;
};

struct OracleResult
{
  TimeField last_period;  // u at t = kT/steps, k = 0..steps-1
  double gap = 0.0;
  int periods = 0;
  std::vector<double> gaps;
};

// Implicit midpoint integration of the initial-value problem from rest until
// successive period states agree to period_tol.
OracleResult time_stepping_oracle(const Model &model, const HarmonicField &f, EquationKind kind,
                                  const OracleOptions &opts = {});

// Rows keyed by metric name; single column "value".
StudyResult oracle_compare(const Model &model, const HarmonicField &f, EquationKind kind,
                           const OracleOptions &opts = {}, const FixedPointOptions &solver = {});

}  // namespace jmgt

#endif  // JMGT_STUDIES_HPP
