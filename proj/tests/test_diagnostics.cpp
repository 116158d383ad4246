// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <map>

#include "diagnostics.hpp"
#include "harmonic_solver.hpp"
#include "norms.hpp"
#include "spatial.hpp"
#include "support.hpp"

using namespace jmgt;

namespace
{

// u(t, x) = cos(w t) sin(pi x) on (0, 1).
HarmonicField standing_wave(const Model &m)
{
  HarmonicField u(m.harmonics, m.grid.nodes);
  u[1] = (0.5 * test::sine_profile(m.grid)).cast<Complex>();
  return u;
}

}  // namespace

TEST_CASE("energies of the zero state vanish")
{
  const Model m = test::base_model(33, 3);
  const EnergyReport e = compute_energies(HarmonicField(3, 33), m);
  for (const auto *level : {&e.lo, &e.me, &e.hi})
  {
    CHECK(level->total == 0.0);
    CHECK(level->terms.size() == 5);
  }
}

TEST_CASE("L2 norms of a standing wave match the closed forms")
{
  const Model m = test::base_model(1025, 2);
  const HarmonicField u = standing_wave(m);
  const double T = m.params.period;
  const double w = m.params.omega();
  CHECK(l2l2_norm(u, m) == doctest::Approx(std::sqrt(T / 4.0)).epsilon(1e-6));
  CHECK(l2l2_norm(u.time_derivative(w), m) == doctest::Approx(w * std::sqrt(T / 4.0)).epsilon(1e-6));
  const HarmonicField ux = [&] {
    HarmonicField g = u;
    for (int k = 0; k <= 2; ++k)
      g[k] = gradient(u[k], m.grid.spacing());
    return g;
  }();
  CHECK(l2l2_norm(ux, m) == doctest::Approx(M_PI * std::sqrt(T / 4.0)).epsilon(1e-5));

  const EnergyReport e = compute_energies(u, m);
  const double pi2 = M_PI * M_PI;
  CHECK(e.lo["u_h1_h1"] == doctest::Approx((1.0 + pi2) * (1.0 + w * w) * T / 4.0).epsilon(1e-5));
  CHECK(e.lo["taubar_utt_l2"] == doctest::Approx(m.params.taubar * std::pow(w, 4) * T / 4.0).epsilon(1e-6));
  CHECK(e.me["laplace_u_h1_l2"] == doctest::Approx(pi2 * pi2 * (1.0 + w * w) * T / 4.0).epsilon(1e-4));
  CHECK(e.lo["taubar_utt_absorbing"] == 0.0);
  CHECK(e.lo["gamma_u_h1_boundary"] == 0.0);
}

TEST_CASE("Parseval norms agree with time-domain quadrature")
{
  const Model m = test::base_model(33, 3);
  const HarmonicField u = test::random_field(3, 33, 12);
  const int nt = 64;
  const TimeField s = to_time_samples(u, nt);
  const RVector w = trapezoid_weights(m.grid);
  double direct = 0.0;
  for (int k = 0; k < nt; ++k)
    direct += s.values.row(k).cwiseAbs2().dot(w) * m.params.period / nt;
  CHECK(std::pow(l2l2_norm(u, m), 2) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("energies scale quadratically")
{
  Model m = test::base_model(33, 3);
  m.right = BoundaryCondition::absorbing(0.5, 0.3);
  const HarmonicField u = test::random_field(3, 33, 14);
  const EnergyReport a = compute_energies(u, m);
  const EnergyReport b = compute_energies(-3.0 * u, m);
  CHECK(b.lo.total == doctest::Approx(9.0 * a.lo.total).epsilon(1e-12));
  CHECK(b.me.total == doctest::Approx(9.0 * a.me.total).epsilon(1e-12));
  CHECK(b.hi.total == doctest::Approx(9.0 * a.hi.total).epsilon(1e-12));
  CHECK(a.lo["taubar_utt_absorbing"] > 0.0);
  CHECK(a.lo["gamma_u_h1_boundary"] > 0.0);
  CHECK(a.bar_hi() == doctest::Approx(a.lo.total + a.me.total + a.hi.total));
}

TEST_CASE("multiplier choice for unit coefficients")
{
  Model m = test::base_model(9, 1, 0.1, 0.5);
  Multipliers mu = choose_multipliers(m.params);
  CHECK(mu.sigma == doctest::Approx(0.75));
  CHECK(mu.rho == doctest::Approx(0.375));

  m.params.tau = 0.0;
  m.params.taubar = 0.0;
  mu = choose_multipliers(m.params);
  CHECK(mu.sigma == doctest::Approx(0.5));
  CHECK(mu.rho == doctest::Approx(0.25));

  m.params.taubar = 0.5;
  m.params.b.setConstant(0.3);
  try
  {
    choose_multipliers(m.params);
    FAIL("expected StabilityViolation");
  }
  catch (const Error &e)
  {
    CHECK(e.kind() == ErrorKind::StabilityViolation);
  }
}

TEST_CASE("the energy identity residual of discrete solutions decays at second order")
{
  std::vector<double> res, hs;
  for (int n : {65, 129, 257, 513})
  {
    Model m = test::base_model(n, 3, 0.1, 0.5);
    m.right = BoundaryCondition::impedance(1.0);
    const RVector x = m.grid.coordinates();
    HarmonicField r(3, n);
    r[1] = test::sine_profile(m.grid).cast<Complex>();
    r[2] = (0.3 * x.array().square()).matrix().cast<Complex>();
    const HarmonicField u = solve_linear_mgt(m, r);
    res.push_back(energy_identity_residual(u, r, choose_multipliers(m.params), m));
    hs.push_back(m.grid.spacing());
  }
  for (std::size_t i = 1; i < res.size(); ++i)
    CHECK(res[i] < res[i - 1]);
  const double order = test::slope(hs[2], res[2], hs[3], res[3]);
  CHECK(order >= 1.8);
  CHECK(order <= 2.2);
}

TEST_CASE("the energy identity residual detects a perturbed state")
{
  Model m = test::base_model(129, 3, 0.1, 0.5);
  m.right = BoundaryCondition::impedance(1.0);
  HarmonicField r(3, 129);
  r[1] = test::sine_profile(m.grid).cast<Complex>();
  const HarmonicField u = solve_linear_mgt(m, r);
  const Multipliers mu = choose_multipliers(m.params);
  const double exact = energy_identity_residual(u, r, mu, m);
  HarmonicField v = u;
  v[1] += 0.1 * u.max_abs() * test::sine_profile(m.grid, 2.0).cast<Complex>();
  CHECK(energy_identity_residual(v, r, mu, m) > 100.0 * exact);
}

TEST_CASE("coefficient smallness norms for linear and sinusoidal profiles")
{
  Model m = test::base_model(1025, 1);
  const RVector x = m.grid.coordinates();
  m.params.b = 1.0 + 0.1 * x.array();
  m.params.c2 = 1.0 + 0.02 * (M_PI * x.array()).sin();
  std::map<std::string, double> v;
  for (const auto &e : coefficient_smallness_report(m.params, m.grid))
    v[e.name] = e.value;
  CHECK(v.size() == 12);
  CHECK(v["grad_b_linf"] == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(v["grad_b_linf_l2"] == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(v["laplace_b_linf"] < 1e-8);
  CHECK(v["normal_b_max"] == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(v["grad_c2_linf"] == doctest::Approx(0.02 * M_PI).epsilon(1e-5));
  CHECK(v["normal_c2_max"] == doctest::Approx(0.02 * M_PI).epsilon(1e-5));
  CHECK(v["laplace_c2_linf"] == doctest::Approx(0.02 * M_PI * M_PI).epsilon(1e-4));
  CHECK(v["grad_c2_l2_l2"] == doctest::Approx(0.02 * M_PI * std::sqrt(0.5)).epsilon(1e-5));
  CHECK(v["grad_alpha"] == 0.0);
  CHECK(v["laplace_alpha"] == 0.0);
}

TEST_CASE("estimate ratios are undefined without data and scale invariant")
{
  Model m = test::base_model(65, 3, 0.1, 0.5);
  m.right = BoundaryCondition::impedance(1.0);
  EstimateSample zero{0.1, HarmonicField(3, 65), HarmonicField(3, 65), HarmonicField(3, 65)};
  const EstimateRow z = estimate_ratios(zero, m);
  CHECK(std::isnan(z.lo));
  CHECK(std::isnan(z.me));
  CHECK(std::isnan(z.hi));

  HarmonicField r(3, 65);
  r[1] = test::sine_profile(m.grid).cast<Complex>();
  const HarmonicField u = solve_linear_mgt(m, r);
  const EstimateRow a = estimate_ratios({0.1, u, r, HarmonicField(3, 65)}, m);
  const EstimateRow b = estimate_ratios({0.1, 7.0 * u, 7.0 * r, HarmonicField(3, 65)}, m);
  CHECK(a.lo > 0.0);
  CHECK(b.lo == doctest::Approx(a.lo).epsilon(1e-12));
  CHECK(b.me == doctest::Approx(a.me).epsilon(1e-12));
  CHECK(b.hi == doctest::Approx(a.hi).epsilon(1e-12));
}

TEST_CASE("low-order estimate ratios stay within a bounded spread across tau")
{
  Model m = test::base_model(65, 3, 0.1, 0.4);
  m.right = BoundaryCondition::impedance(1.0);
  HarmonicField r(3, 65);
  r[1] = test::sine_profile(m.grid).cast<Complex>();
  std::vector<EstimateSample> samples;
  for (double tau : {0.4, 0.2, 0.1, 0.05, 0.0})
    samples.push_back({tau, solve_linear_mgt(with_tau(m, tau), r), r, HarmonicField(3, 65)});
  const EstimateRatioTable t = estimate_ratio_report(samples, m);
  CHECK(t.rows.size() == 5);
  CHECK(t.spread_lo >= 1.0);
  CHECK(t.spread_lo <= 10.0);
}
