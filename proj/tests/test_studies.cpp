// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstring>
#include <functional>

#include "harmonic_solver.hpp"
#include "norms.hpp"
#include "studies.hpp"
#include "support.hpp"

using namespace jmgt;

namespace
{

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

Model oscillator(int nodes = 33, int harmonics = 3)
{
  Model m = test::base_model(nodes, harmonics, 0.1, 0.5);
  m.params.eta.setConstant(1.0);
  m.params.eta_tilde.setConstant(0.5);
  return m;
}

}  // namespace

TEST_CASE("case names round trip and unknown names are rejected")
{
  for (auto c : {ManufacturedCase::LinearDirichlet, ManufacturedCase::LinearImpedance,
                 ManufacturedCase::WesterveltDirichlet, ManufacturedCase::KuznetsovDirichlet})
    CHECK(parse_case(to_string(c)) == c);
  CHECK(kind_of([] { parse_case("linear-neumann"); }) == ErrorKind::UnknownCase);
  CHECK(equation_of(ManufacturedCase::WesterveltDirichlet) == EquationKind::Westervelt);
}

TEST_CASE("impedance wavenumber solves its transcendental equation")
{
  for (double g : {0.1, 1.0, 10.0})
  {
    const double k = impedance_wavenumber(1.0, g);
    CHECK(std::abs(k * std::cos(k) + g * std::sin(k)) < 1e-12);
    CHECK(k > M_PI / 2.0);
    CHECK(k < M_PI);
  }
}

TEST_CASE("manufactured linear forcing matches the hand-derived symbol")
{
  const Model m = test::base_model(17, 2, 0.1, 0.5);
  const double A = 0.3;
  const Manufactured mf = manufactured_case(ManufacturedCase::LinearDirichlet, m, A);
  const double w = m.params.omega();
  const RVector phi = test::sine_profile(m.grid);
  const Complex symbol = Complex(-w * w, -0.1 * w * w * w) + Complex(1.0, w) * (M_PI * M_PI);
  for (int j = 0; j < 17; ++j)
  {
    CHECK(std::abs(mf.u_star[1][j] - 0.5 * A * phi[j]) < 1e-15);
    CHECK(std::abs(mf.f[1][j] + symbol * 0.5 * A * phi[j]) < 1e-13);
  }
  CHECK(mf.u_star[0].cwiseAbs().maxCoeff() == 0.0);
  CHECK(mf.u_star[2].cwiseAbs().maxCoeff() == 0.0);
  CHECK(mf.f[2].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("nonlinear manufactured forcings carry the second harmonic of the nonlinearity")
{
  const Model m = oscillator(17, 2);
  const double A = 0.2;
  const Manufactured w = manufactured_case(ManufacturedCase::WesterveltDirichlet, m, A);
  const Manufactured k = manufactured_case(ManufacturedCase::KuznetsovDirichlet, m, A);
  // N(u*) + f must have no second harmonic beyond discretization error of the gradient.
  const HarmonicField nw = eval_nonlinearity(m, w.u_star, EquationKind::Westervelt);
  CHECK((nw[2] + w.f[2]).cwiseAbs().maxCoeff() < 1e-13);
  const HarmonicField nk = eval_nonlinearity(m, k.u_star, EquationKind::Kuznetsov);
  CHECK((nk[2] + k.f[2]).cwiseAbs().maxCoeff() < 0.05 * k.f[2].cwiseAbs().maxCoeff());
}

TEST_CASE("zero amplitude gives zero data and mismatched boundaries are rejected")
{
  const Model m = oscillator(17, 2);
  const Manufactured z = manufactured_case(ManufacturedCase::WesterveltDirichlet, m, 0.0);
  CHECK(z.u_star.max_abs() == 0.0);
  CHECK(z.f.max_abs() == 0.0);
  CHECK(kind_of([&] { manufactured_case(ManufacturedCase::LinearImpedance, m); }) == ErrorKind::InvalidArgument);
  Model low = m;
  low.harmonics = 1;
  CHECK(kind_of([&] { manufactured_case(ManufacturedCase::WesterveltDirichlet, low); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("convergence study errors fall monotonically at second order")
{
  const Model m = test::base_model(33, 2, 0.1, 0.5);
  const StudyResult r = convergence_study(ManufacturedCase::LinearDirichlet, m, {33, 65, 129});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.at(1, "error_l2l2") < r.at(0, "error_l2l2"));
  CHECK(r.at(2, "error_l2l2") < r.at(1, "error_l2l2"));
  CHECK(r.at(2, "order_l2l2") == doctest::Approx(2.0).epsilon(0.1));
  CHECK(std::isnan(r.at(0, "order_l2l2")));
  CHECK(r.meta("passed") == "true");
  CHECK(r.row_hashes.size() == 3);
  CHECK(kind_of([&] { convergence_study(ManufacturedCase::LinearDirichlet, m, {33, 65}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { convergence_study(ManufacturedCase::LinearDirichlet, m, {33, 65, 100}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("the linear manufactured error does not depend on the harmonic order")
{
  Model m2 = test::base_model(65, 2, 0.1, 0.5);
  Model m4 = test::base_model(65, 4, 0.1, 0.5);
  const auto a = solve_state(m2, manufactured_case(ManufacturedCase::LinearDirichlet, m2).f, EquationKind::Linear);
  const auto b = solve_state(m4, manufactured_case(ManufacturedCase::LinearDirichlet, m4).f, EquationKind::Linear);
  CHECK(test::max_abs_diff(a.u.resized(4), b.u) < 1e-12 * b.u.max_abs());
}

TEST_CASE("tau sweep against the tau = 0 reference")
{
  Model m = test::base_model(33, 3, 0.4, 0.4);
  m.right = BoundaryCondition::impedance(1.0);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  const StudyResult r = tau_sweep(m, f, {0.4, 0.2, 0.1, 0.05, 0.025, 0.0}, EquationKind::Linear);
  REQUIRE(r.rows.size() == 6);
  for (std::size_t i = 1; i + 1 < r.rows.size(); ++i)
    CHECK(r.at(i, "d_lo") < r.at(i - 1, "d_lo"));
  CHECK(r.at(5, "d_lo") == 0.0);
  CHECK(r.at(5, "d_me") == 0.0);
  CHECK(r.meta("d_strictly_decreasing") == "true");
  CHECK(kind_of([&] { tau_sweep(m, f, {0.1, 0.2}, EquationKind::Linear); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { tau_sweep(m, f, {0.5}, EquationKind::Linear); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the tau = 0 row reproduces the reference bit for bit")
{
  const Model m = oscillator();
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  const StudyResult a = tau_sweep(m, f, {0.2, 0.0}, EquationKind::Westervelt);
  const StudyResult b = tau_sweep(m, f, {0.2, 0.0}, EquationKind::Westervelt);
  CHECK(a.at(1, "d_lo") == 0.0);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(std::memcmp(a.rows[i].data(), b.rows[i].data(), a.rows[i].size() * sizeof(double)) == 0);
  CHECK(a.row_hashes == b.row_hashes);
}

TEST_CASE("Taylor remainders vanish for the linear equation")
{
  const Model m = test::base_model(33, 3);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  HarmonicField dir(3, 33);
  dir[1] = test::sine_profile(m.grid, 2.0).cast<Complex>();
  const StudyResult r = taylor_test(m, f, dir, EquationKind::Linear, {1e-2, 1e-3, 1e-4});
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    CHECK(r.at(i, "remainder") < 1e-12);
}

TEST_CASE("Taylor remainders of the Westervelt map decay quadratically")
{
  const Model m = oscillator();
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  HarmonicField dir(3, 33);
  dir[1] = test::sine_profile(m.grid, 2.0).cast<Complex>();
  const StudyResult r = taylor_test(m, f, dir, EquationKind::Westervelt, {1e-2, 1e-3, 1e-4});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.at(1, "slope") == doctest::Approx(2.0).epsilon(0.05));
  CHECK(r.at(2, "slope") == doctest::Approx(2.0).epsilon(0.05));
  CHECK(r.meta("passed") == "true");
}

TEST_CASE("the oracle of zero forcing is the zero state")
{
  const Model m = test::base_model(17, 2);
  OracleOptions o;
  o.steps_per_period = 64;
  const OracleResult r = time_stepping_oracle(m, HarmonicField(2, 17), EquationKind::Linear, o);
  CHECK(r.last_period.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK(r.gap == 0.0);
}

TEST_CASE("oracle discrepancy shrinks with the time step")
{
  Model m = test::base_model(33, 3, 0.1, 0.5);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  OracleOptions coarse;
  coarse.steps_per_period = 64;
  OracleOptions fine = coarse;
  fine.steps_per_period = 128;
  const StudyResult a = oracle_compare(m, f, EquationKind::Linear, coarse);
  const StudyResult b = oracle_compare(m, f, EquationKind::Linear, fine);
  CHECK(b.at("l2l2_discrepancy", "value") < a.at("l2l2_discrepancy", "value"));
  CHECK(test::slope(1.0 / 64, a.at("l2l2_discrepancy", "value"), 1.0 / 128, b.at("l2l2_discrepancy", "value")) >
        1.8);
  CHECK(b.meta("scheme") == "implicit_midpoint");
}

TEST_CASE("oracle failures are reported with their own kinds")
{
  const Model m = oscillator();
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  OracleOptions o;
  o.steps_per_period = 64;
  o.max_periods = 1;
  CHECK(kind_of([&] { time_stepping_oracle(m, f, EquationKind::Linear, o); }) == ErrorKind::NoPeriodicAttractor);
  o.max_periods = 200;
  o.stage_max_iter = 1;
  CHECK(kind_of([&] { time_stepping_oracle(m, f, EquationKind::Westervelt, o); }) == ErrorKind::StepRejected);
}

TEST_CASE("nonlinear oracle reproduces the harmonic-balance second harmonic")
{
  const Model m = oscillator(33, 3);
  const HarmonicField f = test::drive(m, 1.0, test::sine_profile(m.grid));
  OracleOptions o;
  o.steps_per_period = 256;
  const StudyResult r = oracle_compare(m, f, EquationKind::Westervelt, o);
  CHECK(r.at("l2l2_discrepancy", "value") < 1e-3);
  CHECK(r.at("second_harmonic_rel_diff", "value") < 1e-2);
  CHECK(r.at("periodicity_gap", "value") < o.period_tol);
}

TEST_CASE("study results look values up by column and label")
{
  StudyResult r;
  r.label_column = "metric";
  r.columns = {"value"};
  r.add_row({1.5}, "h1", "a");
  r.add_row({2.5}, "h2", "b");
  r.set_meta("x", 0.25);
  CHECK(r.at("b", "value") == 2.5);
  CHECK(r.at(0, "value") == 1.5);
  CHECK(kind_of([&] { r.column("missing"); }) == ErrorKind::InvalidArgument);
  CHECK(r.meta("x") == "0.25");
  CHECK(kind_of([&] { r.meta("nothing"); }) == ErrorKind::InvalidArgument);
}
