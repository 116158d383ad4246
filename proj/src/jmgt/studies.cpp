// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "diagnostics.hpp"
#include "harmonic_solver.hpp"
#include "norms.hpp"
#include "spatial.hpp"

namespace jmgt
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine)
{
  if (!(e_coarse > 0.0) || !(e_fine > 0.0))
    return kNaN;
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

}  // namespace

std::string_view to_string(StudyKind kind) noexcept
{
  switch (kind)
  {
  case StudyKind::Convergence:
    return "convergence";
  case StudyKind::TauSweep:
    return "tau_sweep";
  case StudyKind::Taylor:
    return "taylor";
  case StudyKind::OracleCompare:
    return "oracle_compare";
  }
  return "unknown";
}

void StudyResult::add_row(std::vector<double> values, std::string hash, std::string label)
{
  if (values.size() != columns.size())
    throw Error(ErrorKind::InvalidArgument, "row width does not match the column list");
  rows.push_back(std::move(values));
  row_hashes.push_back(std::move(hash));
  if (!label_column.empty())
    row_labels.push_back(std::move(label));
}

void StudyResult::set_meta(const std::string &key, const std::string &value)
{
  for (auto &kv : metadata)
    if (kv.first == key)
    {
      kv.second = value;
      return;
    }
  metadata.emplace_back(key, value);
}

void StudyResult::set_meta(const std::string &key, double value)
{
  set_meta(key, format_double(value));
}

std::string StudyResult::meta(const std::string &key) const
{
  for (const auto &kv : metadata)
    if (kv.first == key)
      return kv.second;
  throw Error(ErrorKind::InvalidArgument, "no metadata entry " + key);
}

int StudyResult::column(const std::string &name) const
{
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name)
      return static_cast<int>(i);
  throw Error(ErrorKind::InvalidArgument, "no column " + name);
}

double StudyResult::at(std::size_t row, const std::string &name) const
{
  return rows.at(row).at(column(name));
}

double StudyResult::at(const std::string &label, const std::string &name) const
{
  for (std::size_t i = 0; i < row_labels.size(); ++i)
    if (row_labels[i] == label)
      return at(i, name);
  throw Error(ErrorKind::InvalidArgument, "no row " + label);
}

// ---------------------------------------------------------------------------
// Manufactured solutions

ManufacturedCase parse_case(std::string_view name)
{
  for (auto c : {ManufacturedCase::LinearDirichlet, ManufacturedCase::LinearImpedance,
                 ManufacturedCase::WesterveltDirichlet, ManufacturedCase::KuznetsovDirichlet})
    if (to_string(c) == name)
      return c;
  throw Error(ErrorKind::UnknownCase, "unknown manufactured case '" + std::string(name) + "'");
}

std::string_view to_string(ManufacturedCase c) noexcept
{
  switch (c)
  {
  case ManufacturedCase::LinearDirichlet:
    return "linear-dirichlet";
  case ManufacturedCase::LinearImpedance:
    return "linear-impedance";
  case ManufacturedCase::WesterveltDirichlet:
    return "westervelt-dirichlet";
  case ManufacturedCase::KuznetsovDirichlet:
    return "kuznetsov-dirichlet";
  }
  return "unknown";
}

EquationKind equation_of(ManufacturedCase c) noexcept
{
  switch (c)
  {
  case ManufacturedCase::WesterveltDirichlet:
    return EquationKind::Westervelt;
  case ManufacturedCase::KuznetsovDirichlet:
    return EquationKind::Kuznetsov;
  default:
    return EquationKind::Linear;
  }
}

double impedance_wavenumber(double length, double gamma)
{
  if (!(gamma > 0.0) || !(length > 0.0))
    throw Error(ErrorKind::InvalidArgument, "impedance profile needs gamma > 0 and L > 0");
  const auto g = [&](double k) { return k * std::cos(k * length) + gamma * std::sin(k * length); };
  double lo = 0.5 * M_PI / length;
  double hi = M_PI / length;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it)
  {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Manufactured manufactured_case(ManufacturedCase c, const Model &model, double amplitude)
{
  const bool impedance = c == ManufacturedCase::LinearImpedance;
  const bool bc_ok = model.left.is_dirichlet() &&
                     (impedance ? model.right.kind == BcKind::Impedance : model.right.is_dirichlet());
  if (!bc_ok)
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(c)) +
                    (impedance ? " needs Dirichlet left and impedance right" : " needs Dirichlet at both ends"));
  const EquationKind kind = equation_of(c);
  const int M = model.harmonics;
  if (M < (kind == EquationKind::Linear ? 1 : 2))
    throw Error(ErrorKind::InvalidArgument, "manufactured case needs more harmonics");

  const int nx = model.grid.nodes;
  const double L = model.grid.length;
  const auto &p = model.params;
  const double w = p.omega();
  const double k = impedance ? impedance_wavenumber(L, model.right.gamma) : M_PI / L;
  const RVector x = model.grid.coordinates();
  const RVector phi = (k * x.array()).sin();
  const RVector dphi = k * (k * x.array()).cos();

  Manufactured out{HarmonicField(M, nx), HarmonicField(M, nx)};
  const double A = amplitude;
  out.u_star[1] = (0.5 * A * phi).cast<Complex>();
  const Complex time_symbol(-w * w, -p.tau * w * w * w);
  for (int j = 0; j < nx; ++j)
  {
    const Complex stiffness = Complex(p.c2[j], w * p.b[j]) * (k * k);
    out.f[1][j] = -(time_symbol + stiffness) * (0.5 * A * phi[j]);
  }
  if (kind == EquationKind::Westervelt)
  {
    for (int j = 0; j < nx; ++j)
      out.f[2][j] = p.eta[j] * w * w * A * A * phi[j] * phi[j];
  }
  else if (kind == EquationKind::Kuznetsov)
  {
    for (int j = 0; j < nx; ++j)
    {
      const double q = 0.25 * A * A * (dphi[j] * dphi[j] - p.eta_tilde[j] * w * w * phi[j] * phi[j]);
      out.f[2][j] = -Complex(0.0, 2.0 * w) * q;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convergence

StudyResult convergence_study(ManufacturedCase c, const Model &model, const std::vector<int> &grids,
                              const ConvergenceOptions &opts)
{
  if (grids.size() < 3)
    throw Error(ErrorKind::InvalidArgument, "a convergence study needs at least three grids");
  for (std::size_t i = 1; i < grids.size(); ++i)
    if (grids[i] - 1 != 2 * (grids[i - 1] - 1))
      throw Error(ErrorKind::InvalidArgument, "grids must be dyadic refinements (Nx - 1 doubling)");

  StudyResult res;
  res.kind = StudyKind::Convergence;
  res.columns = {"nx", "h", "error_l2l2", "error_h1", "order_l2l2", "order_h1"};
  const EquationKind kind = equation_of(c);
  bool pass = true;
  double prev_l2 = kNaN, prev_h1 = kNaN, prev_h = kNaN;
  for (int nx : grids)
  {
    const Model m = with_nodes(model, nx);
    const Manufactured mf = manufactured_case(c, m, opts.amplitude);
    const SolveReport rep = solve_state(m, mf.f, kind, opts.solver);
    const HarmonicField err = rep.u - mf.u_star;
    const auto data = spatial_data(err, m.grid);
    const double e_l2 = l2l2_norm(err, m);
    const double e_h1 = std::sqrt(parseval_from(data.l2, m.params.period, 0) +
                                  parseval_from(data.h1_semi, m.params.period, 0));
    const double h = m.grid.spacing();
    const double o_l2 = observed_order(prev_l2, e_l2, prev_h, h);
    const double o_h1 = observed_order(prev_h1, e_h1, prev_h, h);
    if (!std::isnan(prev_h) && !(o_l2 >= opts.order_low && o_l2 <= opts.order_high))
      pass = false;
    res.add_row({double(nx), h, e_l2, e_h1, o_l2, o_h1}, fingerprint(m, kind, mf.f));
    prev_l2 = e_l2;
    prev_h1 = e_h1;
    prev_h = h;
  }
  res.set_meta("case", std::string(to_string(c)));
  res.set_meta("amplitude", opts.amplitude);
  res.set_meta("order_window_low", opts.order_low);
  res.set_meta("order_window_high", opts.order_high);
  res.set_meta("passed", pass ? "true" : "false");
  return res;
}

// ---------------------------------------------------------------------------
// Singular limit

StudyResult tau_sweep(const Model &model, const HarmonicField &f, const std::vector<double> &taus,
                      EquationKind kind, const FixedPointOptions &opts)
{
  if (taus.empty())
    throw Error(ErrorKind::InvalidArgument, "empty tau list");
  for (std::size_t i = 0; i < taus.size(); ++i)
  {
    if (!(taus[i] >= 0.0 && taus[i] <= model.params.taubar))
      throw Error(ErrorKind::InvalidArgument, "every tau must lie in [0, taubar]");
    if (i > 0 && !(taus[i] < taus[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "taus must be strictly decreasing");
  }

  StudyResult res;
  res.kind = StudyKind::TauSweep;
  res.columns = {"tau", "d_lo", "d_me", "rate", "E_lo_ratio"};
  const Model base = with_tau(model, 0.0);
  const SolveReport ref = solve_state(base, f, kind, opts);

  std::vector<EstimateSample> samples;
  double prev_tau = kNaN, prev_d = kNaN;
  for (double tau : taus)
  {
    const Model m = with_tau(model, tau);
    const SolveReport rep = solve_state(m, f, kind, opts);
    const HarmonicField diff = rep.u - ref.u;
    const double d_lo = u0_lo_norm(diff, m);
    const double d_me = u0_me_norm(diff, m);
    double rate = kNaN;
    if (tau > 0.0 && prev_tau > 0.0 && prev_d > 0.0 && d_lo > 0.0)
      rate = std::log(prev_d / d_lo) / std::log(prev_tau / tau);
    EstimateSample s{tau, rep.u, f.resized(m.harmonics), eval_nonlinearity(m, rep.u, kind)};
    const EstimateRow ratios = estimate_ratios(s, m);
    samples.push_back(std::move(s));
    res.add_row({tau, d_lo, d_me, rate, ratios.lo}, fingerprint(m, kind, f));
    prev_tau = tau;
    prev_d = d_lo;
  }

  bool decreasing = true;
  double first_positive = kNaN, last_positive = kNaN;
  for (std::size_t i = 0; i < res.rows.size(); ++i)
  {
    if (!(res.rows[i][0] > 0.0))
      continue;
    if (std::isnan(first_positive))
      first_positive = res.rows[i][1];
    else if (!(res.rows[i][1] < last_positive))
      decreasing = false;
    last_positive = res.rows[i][1];
  }
  const EstimateRatioTable table = estimate_ratio_report(samples, model);
  res.set_meta("d_strictly_decreasing", decreasing ? "true" : "false");
  res.set_meta("d_last_over_first", last_positive / first_positive);
  res.set_meta("E_lo_ratio_spread", table.spread_lo);
  res.set_meta("E_me_ratio_spread", table.spread_me);
  res.set_meta("E_hi_ratio_spread", table.spread_hi);
  res.set_meta("reference_iterations", double(ref.iterations));
  return res;
}

// ---------------------------------------------------------------------------
// Derivative check

StudyResult taylor_test(const Model &model, const HarmonicField &f, const HarmonicField &f_dir,
                        EquationKind kind, const std::vector<double> &eps_rel, const TaylorOptions &opts)
{
  if (eps_rel.size() < 3)
    throw Error(ErrorKind::InvalidArgument, "a Taylor test needs at least three eps values");
  for (double e : eps_rel)
    if (!(e > 0.0))
      throw Error(ErrorKind::InvalidArgument, "eps values must be positive");

  const int M = model.harmonics;
  const HarmonicField forcing = f.resized(M);
  const double f_norm = l2l2_norm(forcing, model);
  const double dir_norm = l2l2_norm(f_dir.resized(M), model);
  const HarmonicField dir = dir_norm > 0.0 ? (1.0 / dir_norm) * f_dir.resized(M) : HarmonicField(M, model.grid.nodes);
  const double scale = f_norm > 0.0 ? f_norm : 1.0;

  const SolveReport base = solve_state(model, forcing, kind, opts.solver);
  const LinearizedSolution lin = solve_linearized(model, base.u, dir, kind);

  StudyResult res;
  res.kind = StudyKind::Taylor;
  res.columns = {"eps", "remainder", "slope"};
  double prev_eps = kNaN, prev_r = kNaN, prev_first = kNaN;
  std::string first_slopes;
  bool pass = true;
  double max_relative = 0.0;
  for (double e : eps_rel)
  {
    const double eps = e * scale;
    const HarmonicField fe = forcing + eps * dir;
    SolveReport pert;
    try
    {
      pert = solve_state(model, fe, kind, opts.solver);
    }
    catch (const FixedPointError &err)
    {
      if (err.kind() == ErrorKind::NonContraction || err.kind() == ErrorKind::MaxIterExceeded ||
          err.kind() == ErrorKind::DegeneracyDetected)
        throw Error(ErrorKind::ContractionLost, std::string("perturbed solve failed: ") + err.what());
      throw;
    }
    const HarmonicField delta = pert.u - base.u;
    const double first = u0_lo_norm(delta, model);
    const double r = u0_lo_norm(delta - eps * lin.u, model);
    const double slope = observed_order(prev_r, r, prev_eps, eps);
    const double fslope = observed_order(prev_first, first, prev_eps, eps);
    if (!std::isnan(prev_eps))
    {
      if (!(std::abs(slope - opts.slope_target) <= opts.slope_tolerance))
        pass = false;
      first_slopes += (first_slopes.empty() ? "" : ",") + format_double(fslope);
    }
    max_relative = std::max(max_relative, first > 0.0 ? r / first : 0.0);
    res.add_row({eps, r, slope}, fingerprint(model, kind, fe));
    prev_eps = eps;
    prev_r = r;
    prev_first = first;
  }
  res.set_meta("forcing_norm", f_norm);
  res.set_meta("first_order_slopes", first_slopes);
  res.set_meta("max_remainder_over_increment", max_relative);
  res.set_meta("linearized_strategy", lin.strategy_used == BlockStrategy::Direct ? "direct" : "gmres");
  res.set_meta("linearized_residual", lin.residual);
  res.set_meta("fixed_point_tol", opts.solver.tol);
  res.set_meta("passed", pass ? "true" : "false");
  return res;
}

// ---------------------------------------------------------------------------
// Time-stepping oracle

namespace
{

class OracleStepper
{
public:
  OracleStepper(const Model &model, const HarmonicField &f, EquationKind kind, const OracleOptions &opts)
    : model_(model), kind_(kind), opts_(opts),
      lap_(assemble_laplacian(model.grid, model.left, model.right, 0, model.params.omega()))
  {
    const auto &p = model.params;
    const int n = lap_.size();
    dt_ = p.period / opts.steps_per_period;
    K_ = Tridiagonal<double>(n);
    K_.diag = lap_.matrix.diag.real();
    K_.lower = lap_.matrix.lower.real();
    K_.upper = lap_.matrix.upper.real();
    B_ = boundary_damping(model.grid, model.left, model.right);
    b_ = lap_.restrict_to_free(p.b);
    c2_ = lap_.restrict_to_free(p.c2);
    eta_ = lap_.restrict_to_free(p.eta);
    eta_tilde_ = lap_.restrict_to_free(p.eta_tilde);

    // (2 tau + dt) I + dt bB + dt^2/2 (c2 B + b K) + dt^3/4 c2 K
    Tridiagonal<double> bK = K_;
    bK.scale_rows(b_);
    Tridiagonal<double> c2K = K_;
    c2K.scale_rows(c2_);
    Tridiagonal<double> S(n);
    S.diag = RVector::Constant(n, 2.0 * p.tau + dt_) + dt_ * b_.cwiseProduct(B_) +
             0.5 * dt_ * dt_ * (c2_.cwiseProduct(B_) + bK.diag) + 0.25 * dt_ * dt_ * dt_ * c2K.diag;
    S.lower = 0.5 * dt_ * dt_ * bK.lower + 0.25 * dt_ * dt_ * dt_ * c2K.lower;
    S.upper = 0.5 * dt_ * dt_ * bK.upper + 0.25 * dt_ * dt_ * dt_ * c2K.upper;
    if (!lu_.factor(S))
      throw Error(ErrorKind::SingularOperator, "oracle step matrix is singular");

    for (int m = 0; m <= f.harmonics() && m <= model.harmonics; ++m)
      forcing_.push_back(lap_.restrict_to_free(f[m]));
  }

  int size() const { return lap_.size(); }
  double dt() const { return dt_; }

  RVector forcing_at(double t) const
  {
    RVector r = forcing_[0].real();
    const double w = model_.params.omega();
    for (std::size_t m = 1; m < forcing_.size(); ++m)
      r += 2.0 * (forcing_[m] * std::exp(Complex(0.0, double(m) * w * t))).real();
    return r;
  }

  RVector nonlinearity(const RVector &u, const RVector &v, const RVector &w) const
  {
    if (kind_ == EquationKind::Westervelt)
      return 2.0 * eta_.cwiseProduct(u.cwiseProduct(w) + v.cwiseProduct(v));
    const int nx = model_.grid.nodes;
    const double h = model_.grid.spacing();
    const RVector ux = gradient(extend(u, nx), h);
    const RVector vx = gradient(extend(v, nx), h);
    return 2.0 * eta_tilde_.cwiseProduct(v.cwiseProduct(w)) +
           2.0 * lap_.restrict_to_free(RVector(ux.cwiseProduct(vx)));
  }

  RVector extend(const RVector &reduced, int nx) const
  {
    RVector full = RVector::Zero(nx);
    for (int i = 0; i < size(); ++i)
      full[lap_.free_nodes[i]] = reduced[i];
    return full;
  }

  void step(RVector &u, RVector &v, RVector &w, double t) const
  {
    const double tau = model_.params.tau;
    const double dt = dt_;
    const RVector Kv = K_.apply(v);
    const RVector Ku_half = K_.apply(RVector(u + 0.5 * dt * v));
    const RVector rhs = 2.0 * tau * w -
                        dt * (c2_.cwiseProduct(B_).cwiseProduct(v) + b_.cwiseProduct(Kv) +
                              c2_.cwiseProduct(Ku_half) + forcing_at(t + 0.5 * dt));
    RVector wbar;
    if (kind_ == EquationKind::Linear)
    {
      wbar = lu_.solve(rhs);
    }
    else
    {
      wbar = w;
      bool done = false;
      for (int it = 0; it < opts_.stage_max_iter && !done; ++it)
      {
        const RVector ubar = u + 0.5 * dt * v + 0.25 * dt * dt * wbar;
        const RVector vbar = v + 0.5 * dt * wbar;
        const RVector next = lu_.solve(RVector(rhs - dt * nonlinearity(ubar, vbar, wbar)));
        const double change = (next - wbar).norm();
        done = change <= opts_.stage_tol * std::max(next.norm(), 1e-300) || change == 0.0;
        if (!std::isfinite(change))
          break;
        wbar = next;
      }
      if (!done)
      {
        char buf[96];
        std::snprintf(buf, sizeof buf, "stage iteration failed at t = %.6g", t);
        throw Error(ErrorKind::StepRejected, buf);
      }
    }
    u += dt * (v + 0.5 * dt * wbar);
    v += dt * wbar;
    w = tau > 0.0 ? RVector(2.0 * wbar - w) : wbar;
  }

private:
  Model model_;
  EquationKind kind_;
  OracleOptions opts_;
  SpatialOperator lap_;
  double dt_ = 0.0;
  Tridiagonal<double> K_;
  RVector B_, b_, c2_, eta_, eta_tilde_;
  TridiagonalLU<double> lu_;
  std::vector<CVector> forcing_;
};

RVector stack(const RVector &u, const RVector &v, const RVector &w, bool with_w)
{
  RVector y(u.size() + v.size() + (with_w ? w.size() : 0));
  y << u, v, (with_w ? w : RVector(0));
  return y;
}

}  // namespace

OracleResult time_stepping_oracle(const Model &model, const HarmonicField &f, EquationKind kind,
                                  const OracleOptions &opts)
{
  if (opts.steps_per_period < 2 * model.harmonics + 2 || opts.max_periods < 1 || !(opts.period_tol > 0.0))
    throw Error(ErrorKind::InvalidArgument,
                "oracle needs steps_per_period >= 2M+2, max_periods >= 1, period_tol > 0");
  const OracleStepper stepper(model, f, kind, opts);
  const int n = stepper.size();
  const int nx = model.grid.nodes;
  const bool with_w = model.params.tau > 0.0;
  RVector u = RVector::Zero(n), v = RVector::Zero(n), w = RVector::Zero(n);

  OracleResult out;
  out.last_period.values = Eigen::MatrixXd::Zero(opts.steps_per_period, nx);
  const double T = model.params.period;
  for (int period = 1; period <= opts.max_periods; ++period)
  {
    const RVector start = stack(u, v, w, with_w);
    for (int s = 0; s < opts.steps_per_period; ++s)
    {
      out.last_period.values.row(s) = stepper.extend(u, nx).transpose();
      stepper.step(u, v, w, (period - 1) * T + s * stepper.dt());
    }
    const RVector end = stack(u, v, w, with_w);
    const double diff = (end - start).norm();
    const double size = end.norm();
    if (!std::isfinite(diff))
      throw Error(ErrorKind::StepRejected, "oracle state became non-finite");
    const double gap = size > 0.0 ? diff / size : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    out.gaps.push_back(gap);
    out.gap = gap;
    out.periods = period;
    if (gap < opts.period_tol)
      return out;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "periodicity gap %.3e still above %.3e after %d periods", out.gap,
                opts.period_tol, opts.max_periods);
  throw Error(ErrorKind::NoPeriodicAttractor, buf);
}

StudyResult oracle_compare(const Model &model, const HarmonicField &f, EquationKind kind,
                           const OracleOptions &opts, const FixedPointOptions &solver)
{
  const SolveReport hb = solve_state(model, f, kind, solver);
  const OracleResult oracle = time_stepping_oracle(model, f, kind, opts);
  const TimeField hb_samples = to_time_samples(hb.u, opts.steps_per_period);
  const RVector w = trapezoid_weights(model.grid);
  const Eigen::MatrixXd diff = oracle.last_period.values - hb_samples.values;
  const double num = (diff.cwiseAbs2() * w).sum();
  const double den = (hb_samples.values.cwiseAbs2() * w).sum();
  const double discrepancy = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);

  StudyResult res;
  res.kind = StudyKind::OracleCompare;
  res.label_column = "metric";
  res.columns = {"value"};
  const std::string hash = fingerprint(model, kind, f);
  res.add_row({discrepancy}, hash, "l2l2_discrepancy");
  res.add_row({oracle.gap}, hash, "periodicity_gap");
  res.add_row({double(oracle.periods)}, hash, "periods");
  res.add_row({model.params.period / opts.steps_per_period}, hash, "dt");
  res.add_row({double(hb.iterations)}, hash, "hb_iterations");
  if (kind != EquationKind::Linear && model.harmonics >= 2)
  {
    const HarmonicField oh = to_harmonics(oracle.last_period, model.harmonics);
    const double a = l2_squared(CVector(oh[2] - hb.u[2]), model.grid);
    const double b = l2_squared(hb.u[2], model.grid);
    res.add_row({b > 0.0 ? std::sqrt(a / b) : std::sqrt(a)}, hash, "second_harmonic_rel_diff");
  }
  res.set_meta("scheme", "implicit_midpoint");
  res.set_meta("steps_per_period", double(opts.steps_per_period));
  res.set_meta("period_tol", opts.period_tol);
  res.set_meta("max_periods", double(opts.max_periods));
  return res;
}

}  // namespace jmgt
