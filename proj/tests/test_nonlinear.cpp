// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>

#include "nonlinear.hpp"
#include "norms.hpp"
#include "spatial.hpp"
#include "support.hpp"

using namespace jmgt;

namespace
{

// Brute force: sample the quadratic term at many instants with the direct
// reconstruction, integrate against e^{-i m w t} and differentiate.
HarmonicField brute_force(const Model &model, const HarmonicField &u, EquationKind kind)
{
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  const double w = model.params.omega();
  const double T = model.params.period;
  const int nt = 257;
  HarmonicField ux(M, nx);
  for (int m = 0; m <= M; ++m)
    ux[m] = gradient(u[m], model.grid.spacing());
  const HarmonicField ut = u.time_derivative(w);
  HarmonicField out(M, nx);
  for (int j = 0; j < nx; ++j)
    for (int k = 0; k < nt; ++k)
    {
      const double t = T * k / nt;
      double g;
      if (kind == EquationKind::Westervelt)
      {
        const double v = test::reconstruct(u, j, t, w);
        g = model.params.eta[j] * v * v;
      }
      else
      {
        const double vt = test::reconstruct(ut, j, t, w);
        const double vx = test::reconstruct(ux, j, t, w);
        g = model.params.eta_tilde[j] * vt * vt + vx * vx;
      }
      for (int m = 0; m <= M; ++m)
        out[m][j] += g * std::exp(Complex(0.0, -m * w * t)) / double(nt);
    }
  return out.time_derivative(w, kind == EquationKind::Westervelt ? 2 : 1);
}

Model nonlinear_model(int nodes = 33, int harmonics = 3)
{
  Model m = test::base_model(nodes, harmonics);
  m.params.eta = 0.8 + 0.4 * m.grid.coordinates().array();
  m.params.eta_tilde.setConstant(0.6);
  return m;
}

ErrorKind kind_of(const std::function<void()> &fn)
{
  try
  {
    fn();
  }
  catch (const Error &e)
  {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("nonlinear terms match brute-force time sampling")
{
  const Model m = nonlinear_model();
  const HarmonicField u = test::random_field(3, 33, 4);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const HarmonicField a = eval_nonlinearity(m, u, kind);
    const HarmonicField b = brute_force(m, u, kind);
    CHECK(test::max_abs_diff(a, b) < 1e-10 * b.max_abs());
  }
  CHECK(eval_nonlinearity(m, u, EquationKind::Linear).max_abs() == 0.0);
}

TEST_CASE("a pure first harmonic produces only mean and second-harmonic output")
{
  const Model m = nonlinear_model();
  HarmonicField u(3, 33);
  u[1] = test::sine_profile(m.grid).cast<Complex>() * Complex(0.3, 0.2);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const HarmonicField n = eval_nonlinearity(m, u, kind);
    const double scale = n[2].cwiseAbs().maxCoeff();
    CHECK(scale > 1e-3);
    CHECK(n[1].cwiseAbs().maxCoeff() < 1e-14 * scale);
    CHECK(n[3].cwiseAbs().maxCoeff() < 1e-14 * scale);
    // Westervelt: eta (2 u_1^2 e^{2iwt} ...)_tt gives -4 w^2 eta u_1^2 at m = 2.
    if (kind == EquationKind::Westervelt)
    {
      const double w = m.params.omega();
      for (int j = 0; j < 33; ++j)
        CHECK(std::abs(n[2][j] + 4.0 * w * w * m.params.eta[j] * u[1][j] * u[1][j]) < 1e-12);
    }
  }
}

TEST_CASE("nonlinear terms are quadratically homogeneous")
{
  const Model m = nonlinear_model();
  const HarmonicField u = test::random_field(3, 33, 6);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const HarmonicField a = eval_nonlinearity(m, -2.5 * u, kind);
    const HarmonicField b = 6.25 * eval_nonlinearity(m, u, kind);
    CHECK(test::max_abs_diff(a, b) < 1e-12 * b.max_abs());
  }
}

TEST_CASE("nonlinear terms do not depend on the sample count once dealiased")
{
  const Model m = nonlinear_model(17, 4);
  const HarmonicField u = test::random_field(4, 17, 9);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const HarmonicField ref = eval_nonlinearity(m, u, kind);
    for (int nt : {18, 19, 40, 64, 101})
      CHECK(test::max_abs_diff(eval_nonlinearity(m, u, kind, nt), ref) < 1e-11 * ref.max_abs());
    CHECK(kind_of([&] { eval_nonlinearity(m, u, kind, 17); }) == ErrorKind::UndersampledTime);
  }
}

TEST_CASE("the derivative matches a centred difference quotient")
{
  const Model m = nonlinear_model();
  const HarmonicField u = test::random_field(3, 33, 10);
  const HarmonicField du = test::random_field(3, 33, 11);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    // Quadratic maps: the centred quotient is exact up to rounding.
    const double e = 1e-3;
    const HarmonicField fd =
        (1.0 / (2.0 * e)) * (eval_nonlinearity(m, u + e * du, kind) - eval_nonlinearity(m, u - e * du, kind));
    const HarmonicField d = eval_nonlinearity_derivative(m, u, du, kind);
    CHECK(test::max_abs_diff(fd, d) < 1e-9 * d.max_abs());
  }
}

TEST_CASE("zero forcing converges to zero in one iteration")
{
  const Model m = nonlinear_model();
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const SolveReport r = fixed_point_solve(m, HarmonicField(3, 33), kind);
    CHECK(r.iterations == 1);
    CHECK(r.u.max_abs() == 0.0);
  }
}

TEST_CASE("a small drive contracts quickly to a small residual")
{
  Model m = test::base_model(65, 4);
  m.params.eta.setConstant(1.0);
  m.params.eta_tilde.setConstant(1.0);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const double a = kind == EquationKind::Westervelt ? 1.0 : 0.2;
    const SolveReport r = fixed_point_solve(m, test::drive(m, a, test::sine_profile(m.grid)), kind);
    CHECK(r.iterations <= 30);
    for (double q : r.contraction_ratios)
      CHECK(q < 0.1);
    CHECK(r.final_residual < 1e-10);
    CHECK(r.degeneracy.alpha_min > 0.5);
    CHECK(r.stability_margin > 0.0);
  }
}

TEST_CASE("a huge nonlinearity coefficient is reported as non-contraction")
{
  Model m = test::base_model(65, 4);
  m.params.eta.setConstant(1e6);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  try
  {
    fixed_point_solve(m, f, EquationKind::Westervelt);
    FAIL("expected NonContraction");
  }
  catch (const FixedPointError &e)
  {
    CHECK(e.kind() == ErrorKind::NonContraction);
    CHECK(e.report().iterations >= 1);
  }
}

TEST_CASE("running out of iterations is reported as such")
{
  Model m = test::base_model(33, 3);
  m.params.eta.setConstant(1.0);
  FixedPointOptions o;
  o.max_iter = 2;
  CHECK(kind_of([&] { fixed_point_solve(m, test::drive(m, 1.0, test::sine_profile(m.grid)), EquationKind::Westervelt, o); }) ==
        ErrorKind::MaxIterExceeded);
}

TEST_CASE("invalid fixed-point options are rejected")
{
  FixedPointOptions o;
  o.relaxation = 1.5;
  CHECK(kind_of([&] { validate(o); }) == ErrorKind::InvalidArgument);
  o = {};
  o.tol = 0.0;
  CHECK(kind_of([&] { validate(o); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("degeneracy monitor reproduces hand-computed alpha ranges")
{
  Model m = test::base_model(9, 2, 0.1, 0.5);
  m.params.eta.setConstant(1.0);
  m.params.eta_tilde.setConstant(0.25);
  HarmonicField u(2, 9);
  u[0].setConstant(0.1);
  const auto w = degeneracy_monitor(m, u, EquationKind::Westervelt);
  CHECK(w.alpha_min == doctest::Approx(1.2));
  CHECK(w.alpha_max == doctest::Approx(1.2));
  CHECK(w.stability_margin_min == doctest::Approx(1.0 - 0.5 / 1.2));

  HarmonicField v(2, 9);
  v[1].setConstant(Complex(0.05, 0.0));  // u_t = -2 w 0.05 sin(wt)
  const double amp = 2.0 * 0.25 * 2.0 * m.params.omega() * 0.05;
  const auto k = degeneracy_monitor(m, v, EquationKind::Kuznetsov, 64);
  CHECK(k.alpha_min == doctest::Approx(1.0 - amp).epsilon(1e-12));
  CHECK(k.alpha_max == doctest::Approx(1.0 + amp).epsilon(1e-12));
  const auto lin = degeneracy_monitor(m, v, EquationKind::Linear);
  CHECK(lin.alpha_min == 1.0);
}

TEST_CASE("the fixed point does not depend on the initial guess")
{
  Model m = test::base_model(33, 3);
  m.params.eta.setConstant(1.0);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  const SolveReport a = fixed_point_solve(m, f, EquationKind::Westervelt);
  const HarmonicField guess = a.u + 1e-3 * test::random_field(3, 33, 2, true);
  const SolveReport b = fixed_point_solve(m, f, EquationKind::Westervelt, {}, guess);
  CHECK(test::max_abs_diff(a.u, b.u) < 1e-9 * a.u.max_abs());
}

TEST_CASE("iterates stay inside the prescribed ball or the solve fails")
{
  Model m = test::base_model(33, 3);
  m.params.eta.setConstant(1.0);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  const SolveReport a = fixed_point_solve(m, f, EquationKind::Westervelt);
  FixedPointOptions o;
  o.ball_radius = 2.0 * a.iterate_norms.back();
  const SolveReport b = fixed_point_solve(m, f, EquationKind::Westervelt, o);
  for (double r : b.iterate_norms)
    CHECK(r <= o.ball_radius);
  o.ball_radius = 0.5 * a.iterate_norms.back();
  CHECK(kind_of([&] { fixed_point_solve(m, f, EquationKind::Westervelt, o); }) == ErrorKind::NonContraction);
}

TEST_CASE("the second harmonic grows quadratically with the drive")
{
  Model m = test::base_model(65, 4);
  m.params.eta.setConstant(1.0);
  m.params.eta_tilde.setConstant(1.0);
  for (auto kind : {EquationKind::Westervelt, EquationKind::Kuznetsov})
  {
    const double a0 = 0.01, a1 = 0.1;
    const auto u0 = fixed_point_solve(m, test::drive(m, a0, test::sine_profile(m.grid)), kind).u;
    const auto u1 = fixed_point_solve(m, test::drive(m, a1, test::sine_profile(m.grid)), kind).u;
    const double s = test::slope(a0, spatial_norms(u0[2], m.grid).l2, a1, spatial_norms(u1[2], m.grid).l2);
    CHECK(s == doctest::Approx(2.0).epsilon(0.025));
  }
}

TEST_CASE("the linear kind needs a single solve")
{
  const Model m = test::base_model(33, 3);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  const SolveReport r = solve_state(m, f, EquationKind::Linear);
  CHECK(r.iterations == 1);
  CHECK(test::max_abs_diff(r.u, solve_linear_mgt(m, f)) == 0.0);
  CHECK(r.final_residual < 1e-13);
}
