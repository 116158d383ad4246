// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "norms.hpp"
#include "spatial.hpp"

namespace jmgt
{

namespace
{

int product_samples(int harmonics, int samples)
{
  if (samples == 0)
    return dealiased_samples(harmonics);
  if (samples < 4 * harmonics + 2)
    throw Error(ErrorKind::UndersampledTime,
                "quadratic products need Nt >= 4M+2 = " + std::to_string(4 * harmonics + 2));
  return samples;
}

HarmonicField spatial_gradient(const HarmonicField &u, double h)
{
  HarmonicField g = u;
  for (int m = 0; m <= u.harmonics(); ++m)
    g[m] = gradient(u[m], h);
  return g;
}

// Multiplies every time sample (row) by the nodal coefficient.
Eigen::MatrixXd scale_columns(const Eigen::MatrixXd &values, const RVector &coeff)
{
  return values * coeff.asDiagonal();
}

HarmonicField differentiate(HarmonicField v, double omega, int order)
{
  return v.time_derivative(omega, order);
}

}  // namespace

HarmonicField eval_nonlinearity(const Model &model, const HarmonicField &u, EquationKind kind,
                                int samples)
{
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  if (kind == EquationKind::Linear)
    return HarmonicField(M, nx);
  const int nt = product_samples(M, samples);
  const double omega = model.params.omega();
  const HarmonicField base = u.resized(M);

  if (kind == EquationKind::Westervelt)
  {
    const TimeField s = to_time_samples(base, nt);
    TimeField sq{scale_columns(s.values.cwiseAbs2(), model.params.eta)};
    return differentiate(to_harmonics(sq, M), omega, 2);
  }
  const TimeField ut = to_time_samples(base.time_derivative(omega), nt);
  const TimeField ux = to_time_samples(spatial_gradient(base, model.grid.spacing()), nt);
  TimeField sum{scale_columns(ut.values.cwiseAbs2(), model.params.eta_tilde) + ux.values.cwiseAbs2()};
  return differentiate(to_harmonics(sum, M), omega, 1);
}

HarmonicField eval_nonlinearity_derivative(const Model &model, const HarmonicField &u,
                                           const HarmonicField &du, EquationKind kind)
{
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  if (kind == EquationKind::Linear)
    return HarmonicField(M, nx);
  const int nt = dealiased_samples(M);
  const double omega = model.params.omega();
  const HarmonicField base = u.resized(M);
  const HarmonicField dir = du.resized(M);

  if (kind == EquationKind::Westervelt)
  {
    const TimeField a = to_time_samples(base, nt);
    const TimeField b = to_time_samples(dir, nt);
    TimeField prod{scale_columns(2.0 * a.values.cwiseProduct(b.values), model.params.eta)};
    return differentiate(to_harmonics(prod, M), omega, 2);
  }
  const double h = model.grid.spacing();
  const TimeField at = to_time_samples(base.time_derivative(omega), nt);
  const TimeField bt = to_time_samples(dir.time_derivative(omega), nt);
  const TimeField ax = to_time_samples(spatial_gradient(base, h), nt);
  const TimeField bx = to_time_samples(spatial_gradient(dir, h), nt);
  TimeField prod{2.0 * scale_columns(at.values.cwiseProduct(bt.values), model.params.eta_tilde) +
                 2.0 * ax.values.cwiseProduct(bx.values)};
  return differentiate(to_harmonics(prod, M), omega, 1);
}

DegeneracyReport degeneracy_monitor(const Model &model, const HarmonicField &u, EquationKind kind,
                                    int samples)
{
  const int M = u.harmonics();
  const int nt = samples > 0 ? samples : dealiased_samples(M);
  const auto &p = model.params;
  Eigen::MatrixXd alpha = Eigen::MatrixXd::Ones(nt, model.grid.nodes);
  if (kind == EquationKind::Westervelt)
    alpha += 2.0 * scale_columns(to_time_samples(u, nt).values, p.eta);
  else if (kind == EquationKind::Kuznetsov)
    alpha += 2.0 * scale_columns(to_time_samples(u.time_derivative(p.omega()), nt).values, p.eta_tilde);

  DegeneracyReport rep;
  rep.alpha_min = alpha.minCoeff();
  rep.alpha_max = alpha.maxCoeff();
  if (rep.alpha_min <= 0.0)
  {
    rep.stability_margin_min = -std::numeric_limits<double>::infinity();
    return rep;
  }
  const RVector ratio = p.b.array() / p.c2.array();
  const Eigen::MatrixXd margin =
      ratio.transpose().replicate(nt, 1) - (p.taubar * alpha.array().inverse()).matrix();
  rep.stability_margin_min = margin.minCoeff();
  return rep;
}

void validate(const FixedPointOptions &opts)
{
  if (!(opts.tol > 0.0) || opts.max_iter < 1 || !(opts.relaxation > 0.0 && opts.relaxation <= 1.0) ||
      !(opts.ball_radius > 0.0) || opts.noncontraction_window < 1)
    throw Error(ErrorKind::InvalidArgument,
                "fixed-point options need tol > 0, max_iter >= 1, 0 < relaxation <= 1, ball_radius > 0");
}

namespace
{

double free_l2l2(const Model &model, const SpatialOperator &lap, HarmonicField v)
{
  const int nx = model.grid.nodes;
  for (int m = 0; m <= v.harmonics(); ++m)
    v[m] = lap.extend_from_free(lap.restrict_to_free(v[m]), nx);
  return l2l2_norm(v, model);
}

}  // namespace

double pde_residual(const LinearMgtSolver &solver, const HarmonicField &u, const HarmonicField &f,
                    EquationKind kind)
{
  const Model &model = solver.model();
  const int M = model.harmonics;
  const HarmonicField du = solver.apply(u);
  const HarmonicField nu = eval_nonlinearity(model, u, kind);
  const HarmonicField ff = f.resized(M);
  const auto &lap = solver.laplacian(0);
  const double num = free_l2l2(model, lap, du + nu + ff);
  const double den = free_l2l2(model, lap, du) + free_l2l2(model, lap, nu) + free_l2l2(model, lap, ff);
  return den > 0.0 ? num / den : 0.0;
}

SolveReport fixed_point_solve(const Model &model, const HarmonicField &f, EquationKind kind,
                              const FixedPointOptions &opts, const std::optional<HarmonicField> &initial)
{
  validate(opts);
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  const LinearMgtSolver solver(model);
  const HarmonicField forcing = f.resized(M);

  SolveReport rep;
  HarmonicField u = initial ? initial->resized(M) : HarmonicField(M, nx);
  bool converged = false;
  int above_one = 0;

  auto fail = [&](ErrorKind k, const std::string &msg) {
    rep.u = u;
    throw FixedPointError(k, msg, rep);
  };

  for (int it = 1; it <= opts.max_iter; ++it)
  {
    HarmonicField next = solver.solve(forcing + eval_nonlinearity(model, u, kind));
    if (opts.relaxation < 1.0)
      next = opts.relaxation * next + (1.0 - opts.relaxation) * u;
    const double update = u0_lo_norm(next - u, model);
    const double size = u0_lo_norm(next, model);
    rep.iterations = it;
    rep.update_norms.push_back(update);
    rep.iterate_norms.push_back(size);
    if (it >= 2)
    {
      const double prev = rep.update_norms[it - 2];
      const double ratio = prev > 0.0 ? update / prev : 0.0;
      rep.contraction_ratios.push_back(ratio);
      above_one = ratio >= 1.0 ? above_one + 1 : 0;
    }
    u = std::move(next);

    if (!std::isfinite(update) || !std::isfinite(size))
      fail(ErrorKind::NonContraction, "iterates left the finite range at iteration " + std::to_string(it));
    if (size > opts.ball_radius)
    {
      char buf[160];
      std::snprintf(buf, sizeof buf, "iterate norm %.3e left the ball of radius %.3e at iteration %d",
                    size, opts.ball_radius, it);
      fail(ErrorKind::NonContraction, buf);
    }
    const double relative = size > 0.0 ? update / size : update;
    if (relative < opts.tol)
    {
      converged = true;
      break;
    }
    if (above_one >= opts.noncontraction_window)
    {
      char buf[160];
      std::snprintf(buf, sizeof buf, "contraction ratio >= 1 for %d consecutive iterations (last %.3e)",
                    above_one, rep.contraction_ratios.back());
      fail(ErrorKind::NonContraction, buf);
    }
  }
  if (!converged)
    fail(ErrorKind::MaxIterExceeded, "no convergence within " + std::to_string(opts.max_iter) + " iterations");

  rep.u = u;
  rep.final_residual = pde_residual(solver, u, forcing, kind);
  rep.degeneracy = degeneracy_monitor(model, u, kind);
  rep.degeneracy_margin = rep.degeneracy.alpha_min;
  rep.stability_margin = rep.degeneracy.stability_margin_min;
  if (rep.degeneracy.alpha_min < opts.degeneracy_floor)
  {
    char buf[160];
    std::snprintf(buf, sizeof buf, "alpha_min = %.6g below floor %.3g", rep.degeneracy.alpha_min,
                  opts.degeneracy_floor);
    throw FixedPointError(ErrorKind::DegeneracyDetected, buf, rep);
  }
  if (!(rep.stability_margin > 0.0))
  {
    char buf[160];
    std::snprintf(buf, sizeof buf, "min(b/c2 - taubar/alpha) = %.6g is not positive", rep.stability_margin);
    throw FixedPointError(ErrorKind::DegeneracyDetected, buf, rep);
  }
  return rep;
}

SolveReport solve_state(const Model &model, const HarmonicField &f, EquationKind kind,
                        const FixedPointOptions &opts)
{
  if (kind != EquationKind::Linear)
    return fixed_point_solve(model, f, kind, opts);
  const LinearMgtSolver solver(model);
  SolveReport rep;
  rep.u = solver.solve(f.resized(model.harmonics));
  rep.iterations = 1;
  rep.update_norms.push_back(u0_lo_norm(rep.u, model));
  rep.iterate_norms.push_back(rep.update_norms.back());
  rep.final_residual = pde_residual(solver, rep.u, f, kind);
  rep.degeneracy = degeneracy_monitor(model, rep.u, kind);
  rep.degeneracy_margin = rep.degeneracy.alpha_min;
  rep.stability_margin = rep.degeneracy.stability_margin_min;
  return rep;
}

}  // namespace jmgt
