// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_NONLINEAR_HPP
#define JMGT_NONLINEAR_HPP

#include <limits>
#include <optional>
#include <vector>

#include "error.hpp"
#include "fourier.hpp"
#include "harmonic_solver.hpp"
#include "model.hpp"

namespace jmgt
{

// Order-M truncation of the nonlinear term (forcing excluded):
//   Westervelt: eta (u^2)_tt,   Kuznetsov: (eta_tilde u_t^2 + u_x^2)_t.
// Products are formed on dealiased_samples(M) time samples, so the result
// does not depend on the sample count as long as Nt >= 4M+2.
HarmonicField eval_nonlinearity(const Model &model, const HarmonicField &u, EquationKind kind,
                                int samples = 0);

// Directional derivative N'(u) du, evaluated pseudospectrally.
HarmonicField eval_nonlinearity_derivative(const Model &model, const HarmonicField &u,
                                           const HarmonicField &du, EquationKind kind);

struct DegeneracyReport
{
  double alpha_min = 1.0;
  double alpha_max = 1.0;
  // min over samples of b/c^2 - taubar/alpha; -inf once alpha <= 0 somewhere.
  double stability_margin_min = 0.0;
};

// alpha = 1 + 2 eta u (Westervelt) or 1 + 2 eta_tilde u_t (Kuznetsov) sampled
// on the time grid (dealiased by default). Pure diagnostic.
DegeneracyReport degeneracy_monitor(const Model &model, const HarmonicField &u, EquationKind kind,
                                    int samples = 0);

struct FixedPointOptions
{
  double tol = 1e-11;
  int max_iter = 100;
  double relaxation = 1.0;
  double ball_radius = std::numeric_limits<double>::infinity();
  double degeneracy_floor = 0.1;
  // consecutive contraction ratios >= 1 tolerated before giving up
  int noncontraction_window = 5;
};

void validate(const FixedPointOptions &opts);

struct SolveReport
{
  HarmonicField u;
  int iterations = 0;
  std::vector<double> update_norms;
  std::vector<double> contraction_ratios;
  std::vector<double> iterate_norms;
  double final_residual = 0.0;
  double degeneracy_margin = 1.0;  // alpha_min
  double stability_margin = 0.0;
  DegeneracyReport degeneracy;
};

// Error carrying the iteration history gathered before the failure.
class FixedPointError : public Error
{
public:
  FixedPointError(ErrorKind kind, const std::string &message, SolveReport report)
    : Error(kind, message), report_(std::move(report))
  {
  }
  const SolveReport &report() const { return report_; }

private:
  SolveReport report_;
};

// Relative residual |Du + N(u) + f| / (|Du| + |N(u)| + |f|) on the free rows,
// measured in the discrete L2(0,T;L2) norm.
double pde_residual(const LinearMgtSolver &solver, const HarmonicField &u, const HarmonicField &f,
                    EquationKind kind);

// Picard iteration u <- theta S_lin(f + N(u)) + (1 - theta) u from u = 0 (or
// `initial`). Stops on relative U0_lo update < tol.
SolveReport fixed_point_solve(const Model &model, const HarmonicField &f, EquationKind kind,
                              const FixedPointOptions &opts = {},
                              const std::optional<HarmonicField> &initial = std::nullopt);

// Linear kind short-circuits to one linear solve; otherwise fixed_point_solve.
SolveReport solve_state(const Model &model, const HarmonicField &f, EquationKind kind,
                        const FixedPointOptions &opts = {});

}  // namespace jmgt

#endif  // JMGT_NONLINEAR_HPP
