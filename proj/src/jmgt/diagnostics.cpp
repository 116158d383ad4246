// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "norms.hpp"
#include "spatial.hpp"

namespace jmgt
{

void EnergyLevel::add(std::string name, double value)
{
  terms.push_back({std::move(name), value});
  total += value;
}

double EnergyLevel::operator[](const std::string &name) const
{
  for (const auto &t : terms)
    if (t.name == name)
      return t.value;
  throw Error(ErrorKind::InvalidArgument, "no energy term named " + name);
}

namespace
{

struct Endpoint
{
  int node;
  const BoundaryCondition *bc;
  double normal;  // outward normal direction
};

std::vector<Endpoint> endpoints(const Model &model)
{
  return {{0, &model.left, -1.0}, {model.grid.nodes - 1, &model.right, 1.0}};
}

// Per-harmonic squared quantities, summed over time derivative orders.
double parseval_orders(const std::vector<double> &v, double period, int from, int to)
{
  double s = 0.0;
  for (int k = from; k <= to; ++k)
    s += parseval_from(v, period, k);
  return s;
}

std::vector<double> trace_squares(const HarmonicField &u, int node)
{
  std::vector<double> out;
  for (int m = 0; m <= u.harmonics(); ++m)
    out.push_back(std::norm(u[m][node]));
  return out;
}

std::vector<double> add(std::vector<double> a, const std::vector<double> &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

HarmonicField map_space(const HarmonicField &u, const auto &fn)
{
  HarmonicField out = u;
  for (int m = 0; m <= u.harmonics(); ++m)
    out[m] = fn(u[m]);
  return out;
}

std::vector<double> dual_squares(const HarmonicField &u, const Model &model)
{
  const DualNormH1Star dual(model.grid, model.left, model.right);
  std::vector<double> out;
  for (int m = 0; m <= u.harmonics(); ++m)
    out.push_back(dual.squared(u[m]));
  return out;
}

// int_0^T int_Omega w p q, both fields real in time.
double spacetime_inner(const HarmonicField &p, const HarmonicField &q, const RVector &weights, double period)
{
  double s = 0.0;
  for (int m = 0; m <= p.harmonics(); ++m)
  {
    const double wm = m == 0 ? 1.0 : 2.0;
    s += wm * (weights.cast<Complex>().array() * p[m].array() * q[m].conjugate().array()).sum().real();
  }
  return period * s;
}

double point_inner(const HarmonicField &p, const HarmonicField &q, int node, double period)
{
  double s = 0.0;
  for (int m = 0; m <= p.harmonics(); ++m)
    s += (m == 0 ? 1.0 : 2.0) * (p[m][node] * std::conj(q[m][node])).real();
  return period * s;
}

}  // namespace

EnergyReport compute_energies(const HarmonicField &u, const Model &model)
{
  const double T = model.params.period;
  const double tau = model.params.tau;
  const double taubar = model.params.taubar;
  const double h = model.grid.spacing();
  const auto data = spatial_data(u, model.grid);
  const auto dual = dual_squares(u, model);
  const auto h1 = add(data.l2, data.h1_semi);
  const HarmonicField lap = map_space(u, [h](const CVector &v) { return second_derivative(v, h); });
  const HarmonicField grad_lap = map_space(lap, [h](const CVector &v) { return gradient(v, h); });
  std::vector<double> grad_lap_sq;
  for (int m = 0; m <= u.harmonics(); ++m)
    grad_lap_sq.push_back(l2_squared(grad_lap[m], model.grid));

  double absorbing_u = 0.0, absorbing_uttt = 0.0, absorbing_lap = 0.0;
  double gamma_h1 = 0.0, gamma_h2 = 0.0, gamma_lap = 0.0;
  for (const auto &e : endpoints(model))
  {
    const auto tr = trace_squares(u, e.node);
    const auto tr_lap = trace_squares(lap, e.node);
    if (e.bc->kind == BcKind::Absorbing)
    {
      absorbing_u += parseval_from(tr, T, 2);
      absorbing_uttt += parseval_from(tr, T, 3);
      absorbing_lap += parseval_from(tr_lap, T, 2);
    }
    const double g = e.bc->gamma;
    gamma_h1 += g * parseval_orders(tr, T, 0, 1);
    gamma_h2 += g * parseval_orders(tr, T, 0, 2);
    gamma_lap += g * g * parseval_orders(tr_lap, T, 0, 1);
  }

  EnergyReport r;
  r.lo.add("taubar_tau2_uttt_dual", taubar * tau * tau * parseval_from(dual, T, 3));
  r.lo.add("taubar_utt_l2", taubar * parseval_from(data.l2, T, 2));
  r.lo.add("u_h1_h1", parseval_orders(h1, T, 0, 1));
  r.lo.add("taubar_utt_absorbing", taubar * absorbing_u);
  r.lo.add("gamma_u_h1_boundary", gamma_h1);

  r.me.add("taubar_tau2_uttt_l2", taubar * tau * tau * parseval_from(data.l2, T, 3));
  r.me.add("taubar_utt_h1", taubar * parseval_from(h1, T, 2));
  r.me.add("laplace_u_h1_l2", parseval_orders(data.laplace, T, 0, 1));
  r.me.add("taubar_tau_uttt_absorbing", taubar * tau * absorbing_uttt);
  r.me.add("gamma_u_h2_boundary", gamma_h2);

  r.hi.add("taubar_tau2_uttt_dual", taubar * tau * tau * parseval_from(dual, T, 3));
  r.hi.add("taubar_laplace_utt_l2", taubar * parseval_from(data.laplace, T, 2));
  r.hi.add("grad_laplace_u_h1_l2", parseval_orders(grad_lap_sq, T, 0, 1));
  r.hi.add("taubar_laplace_utt_absorbing", taubar * absorbing_lap);
  r.hi.add("gamma_laplace_u_h1_boundary", gamma_lap);
  return r;
}

Multipliers choose_multipliers(const PhysicalParams &params)
{
  const double margin = stability_margin(params);
  if (!(margin > 0.0))
  {
    char buf[128];
    std::snprintf(buf, sizeof buf, "min(b/c2) - taubar = %.6g is not positive", margin);
    throw Error(ErrorKind::StabilityViolation, buf);
  }
  const RVector c2_over_b = params.c2.array() / params.b.array();
  const double tb = params.taubar;
  Multipliers mu;
  mu.sigma = (0.5 * (tb * c2_over_b.array() + 1.0)).minCoeff();
  const double rho_bound =
      std::min(mu.sigma * c2_over_b.minCoeff(),
               tb > 0.0 ? mu.sigma / tb : std::numeric_limits<double>::infinity());
  mu.rho = 0.5 * rho_bound;

  const double max_b_over_c2 = (1.0 / c2_over_b.array()).maxCoeff();
  const bool ok = tb * c2_over_b.maxCoeff() < mu.sigma && mu.sigma < 1.0 && mu.rho > 0.0 &&
                  mu.rho * max_b_over_c2 < mu.sigma && (tb == 0.0 || mu.rho <= mu.sigma / tb);
  if (!ok)
  {
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "no admissible multipliers: sigma = %.6g must exceed taubar*max(c2/b) = %.6g and stay below 1",
                  mu.sigma, tb * c2_over_b.maxCoeff());
    throw Error(ErrorKind::StabilityViolation, buf);
  }
  return mu;
}

double energy_identity_residual(const HarmonicField &u, const HarmonicField &rtilde,
                                const Multipliers &mult, const Model &model)
{
  const auto &p = model.params;
  const double T = p.period;
  const double omega = p.omega();
  const double h = model.grid.spacing();
  const double sigma = mult.sigma;
  const double rho = mult.rho;
  const int M = u.harmonics();
  const HarmonicField r = rtilde.resized(M);

  const HarmonicField ut = u.time_derivative(omega, 1);
  const HarmonicField utt = u.time_derivative(omega, 2);
  const HarmonicField v = p.taubar * utt + sigma * ut + rho * u;
  const auto grad = [h](const CVector &x) { return gradient(x, h); };
  const HarmonicField grad_u = map_space(u, grad);
  const HarmonicField grad_ut = map_space(ut, grad);

  const RVector grad_b = gradient(p.b, h);
  const RVector grad_c2 = gradient(p.c2, h);
  HarmonicField flux = u;
  for (int m = 0; m <= M; ++m)
    flux[m] = grad_b.cast<Complex>().cwiseProduct(ut[m]) + grad_c2.cast<Complex>().cwiseProduct(u[m]);
  const HarmonicField div_flux = map_space(flux, grad);

  const RVector w = trapezoid_weights(model.grid);
  const RVector stiff_t = (sigma * p.b - p.taubar * p.c2).cwiseProduct(w);
  const RVector stiff = (rho * p.c2).cwiseProduct(w);

  double s = 0.0;
  s += (p.taubar - p.tau * sigma) * spacetime_inner(utt, utt, w, T);
  s -= rho * spacetime_inner(ut, ut, w, T);
  s += spacetime_inner(r, v, w, T);
  s -= spacetime_inner(div_flux, v, w, T);
  s += spacetime_inner(grad_ut, grad_ut, stiff_t, T);
  s += spacetime_inner(grad_u, grad_u, stiff, T);

  for (const auto &e : endpoints(model))
  {
    const int j = e.node;
    const double beta = e.bc->beta;
    const double gamma = e.bc->gamma;
    const double b = p.b[j];
    const double c2 = p.c2[j];
    if (e.bc->kind == BcKind::Absorbing || e.bc->kind == BcKind::Impedance)
    {
      s += p.taubar * beta * b * point_inner(utt, utt, j, T);
      s += (beta * (sigma * c2 - rho * b) + gamma * (sigma * b - p.taubar * c2)) * point_inner(ut, ut, j, T);
      s += rho * gamma * c2 * point_inner(u, u, j, T);
    }
    HarmonicField normal_flux = ut;
    for (int m = 0; m <= M; ++m)
      normal_flux[m] = e.normal * (grad_b[j] * ut[m] + grad_c2[j] * u[m]);
    s += point_inner(normal_flux, v, j, T);
  }
  return std::abs(s);
}

std::vector<NamedValue> coefficient_smallness_report(const PhysicalParams &params, const Grid &grid)
{
  const double h = grid.spacing();
  const double T = params.period;
  const RVector gb = gradient(params.b, h);
  const RVector gc = gradient(params.c2, h);
  const RVector lb = second_derivative(params.b, h);
  const RVector lc = second_derivative(params.c2, h);
  const auto l2 = [&grid](const RVector &v) { return std::sqrt(l2_squared(v.cast<Complex>(), grid)); };
  const auto linf = [](const RVector &v) { return v.cwiseAbs().maxCoeff(); };
  const int n = grid.nodes - 1;
  return {
      {"grad_b_linf_l2", l2(gb)},
      {"grad_b_linf", linf(gb)},
      {"grad_c2_l2_l2", std::sqrt(T) * l2(gc)},
      {"grad_c2_linf", linf(gc)},
      {"laplace_b_linf_l2", l2(lb)},
      {"laplace_b_linf", linf(lb)},
      {"laplace_c2_l2_l2", std::sqrt(T) * l2(lc)},
      {"laplace_c2_linf", linf(lc)},
      {"normal_b_max", std::max(std::abs(gb[0]), std::abs(gb[n]))},
      {"normal_c2_max", std::max(std::abs(gc[0]), std::abs(gc[n]))},
      {"grad_alpha", 0.0},
      {"laplace_alpha", 0.0},
  };
}

EstimateRow estimate_ratios(const EstimateSample &sample, const Model &model)
{
  const Model m = with_tau(model, sample.tau);
  const double T = m.params.period;
  const double taubar = m.params.taubar;
  const double h = m.grid.spacing();
  const int M = sample.u.harmonics();
  const HarmonicField rg = sample.rtilde_grad.resized(M);
  const HarmonicField rt = sample.rtilde_time.resized(M);
  const HarmonicField r = rg + rt;
  const EnergyReport e = compute_energies(sample.u, m);

  const auto sq = [&](const HarmonicField &f) { return std::pow(l2l2_norm(f, m), 2); };
  const double r_l2 = sq(r);
  const double r_dual = parseval_from(dual_squares(r, m), T, 0);
  const double rg_t = sq(rg.time_derivative(m.params.omega()));
  const double grad_rt = sq(map_space(rt, [h](const CVector &v) { return gradient(v, h); }));
  double rt_boundary = 0.0;
  for (const auto &ep : endpoints(m))
    rt_boundary += parseval_from(trace_squares(rt, ep.node), T, 0);
  const HarmonicField lap_r = map_space(r, [h](const CVector &v) { return second_derivative(v, h); });
  const double lap_r_l2 = sq(lap_r);
  const double lap_r_dual = parseval_from(dual_squares(lap_r, m), T, 0);

  const auto ratio = [](double num, double den) {
    return den > 0.0 ? num / den : std::numeric_limits<double>::quiet_NaN();
  };
  EstimateRow row;
  row.tau = sample.tau;
  row.lo = ratio(e.lo.total, taubar * r_l2 + r_dual);
  const bool zero_data = !(r_l2 > 0.0);
  row.me = zero_data ? std::numeric_limits<double>::quiet_NaN()
                     : ratio(e.bar_me(), e.lo.total + taubar * taubar * rg_t + taubar * grad_rt + rt_boundary + r_l2);
  row.hi = zero_data ? std::numeric_limits<double>::quiet_NaN()
                     : ratio(e.bar_hi(), e.me.total + taubar * lap_r_l2 + lap_r_dual);
  return row;
}

EstimateRatioTable estimate_ratio_report(const std::vector<EstimateSample> &samples, const Model &model)
{
  EstimateRatioTable table;
  for (const auto &s : samples)
    table.rows.push_back(estimate_ratios(s, model));
  const auto spread = [&](double EstimateRow::*field) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto &r : table.rows)
    {
      const double v = r.*field;
      if (!std::isfinite(v))
        continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return lo > 0.0 && std::isfinite(lo) ? hi / lo : std::numeric_limits<double>::quiet_NaN();
  };
  table.spread_lo = spread(&EstimateRow::lo);
  table.spread_me = spread(&EstimateRow::me);
  table.spread_hi = spread(&EstimateRow::hi);
  return table;
}

}  // namespace jmgt
