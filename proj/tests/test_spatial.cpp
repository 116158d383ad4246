// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "spatial.hpp"
#include "support.hpp"

using namespace jmgt;

TEST_CASE("Dirichlet Laplacian on five nodes is the textbook 3x3 stencil")
{
  const Grid g{1.0, 5};
  for (int m : {0, 1, 3})
  {
    const auto op = assemble_laplacian(g, BoundaryCondition::dirichlet(), BoundaryCondition::dirichlet(), m, 2.0);
    REQUIRE(op.size() == 3);
    CHECK(op.free_nodes == std::vector<int>{1, 2, 3});
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(op.matrix.diag[i] - Complex(32.0)) < 1e-12);
    for (int i = 0; i < 2; ++i)
    {
      CHECK(std::abs(op.matrix.lower[i] - Complex(-16.0)) < 1e-12);
      CHECK(std::abs(op.matrix.upper[i] - Complex(-16.0)) < 1e-12);
    }
  }
}

TEST_CASE("absorbing Robin coefficient adds i m omega beta only for m >= 1")
{
  const Grid g{1.0, 9};
  const double h = g.spacing();
  const auto bc = BoundaryCondition::absorbing(1.0);
  const auto op0 = assemble_laplacian(g, BoundaryCondition::dirichlet(), bc, 0, 1.0);
  const auto op1 = assemble_laplacian(g, BoundaryCondition::dirichlet(), bc, 1, 1.0);
  const int last = op0.size() - 1;
  CHECK(op0.matrix.diag[last].imag() == 0.0);
  CHECK(op1.matrix.diag[last].imag() == doctest::Approx(2.0 / h));
  CHECK(bc.robin_coefficient(1, 1.0) == Complex(0.0, 1.0));
}

TEST_CASE("Neumann-Neumann mean mode is flagged singular")
{
  const Grid g{1.0, 17};
  const auto op = assemble_laplacian(g, BoundaryCondition::neumann(), BoundaryCondition::neumann(), 0, 1.0);
  CHECK(op.singular);
  const auto op1 = assemble_laplacian(g, BoundaryCondition::neumann(), BoundaryCondition::impedance(1.0), 0, 1.0);
  CHECK_FALSE(op1.singular);
}

TEST_CASE("weighted operator is symmetric for real Robin data")
{
  const Grid g{2.0, 41};
  const auto op = assemble_laplacian(g, BoundaryCondition::impedance(0.7), BoundaryCondition::neumann(), 0, 1.0);
  Tridiagonal<Complex> weighted = op.matrix;
  weighted.scale_rows(op.lumped_weights.cast<Complex>());
  const Eigen::MatrixXcd d = weighted.dense();
  CHECK((d - d.transpose()).cwiseAbs().maxCoeff() < 1e-13 * d.cwiseAbs().maxCoeff());
}

TEST_CASE("operator consistency is second order for smooth functions with matching data")
{
  // u = sin(pi x) + x^2 (1 - x)^2 with u(0) = u(1) = 0, -u'' known in closed form.
  std::vector<double> errs, hs;
  for (int n : {33, 65, 129, 257})
  {
    const Grid g{1.0, n};
    const auto op = assemble_laplacian(g, BoundaryCondition::dirichlet(), BoundaryCondition::dirichlet(), 0, 1.0);
    const RVector x = g.coordinates();
    const RVector u = (M_PI * x.array()).sin() + x.array().square() * (1.0 - x.array()).square();
    const RVector mdd = M_PI * M_PI * (M_PI * x.array()).sin() - (2.0 - 12.0 * x.array() + 12.0 * x.array().square());
    const CVector Au = op.matrix.apply(op.restrict_to_free(CVector(u.cast<Complex>())));
    errs.push_back((Au - op.restrict_to_free(CVector(mdd.cast<Complex>()))).cwiseAbs().maxCoeff());
    hs.push_back(g.spacing());
  }
  for (std::size_t i = 1; i < errs.size(); ++i)
    CHECK(test::slope(hs[i - 1], errs[i - 1], hs[i], errs[i]) >= 1.8);
}

TEST_CASE("impedance boundary rows are consistent")
{
  // u = cos(x): u'(0) = 0 and u'(1) + tan(1) u(1) = 0, with -u'' = u.
  const double gamma = std::tan(1.0);
  std::vector<double> errs, hs;
  for (int n : {33, 65, 129, 257})
  {
    const Grid g{1.0, n};
    const auto op = assemble_laplacian(g, BoundaryCondition::neumann(), BoundaryCondition::impedance(gamma), 0, 1.0);
    REQUIRE(op.size() == n);
    const CVector u = g.coordinates().array().cos().matrix().cast<Complex>();
    errs.push_back((op.matrix.apply(u) - u).cwiseAbs().maxCoeff());
    hs.push_back(g.spacing());
  }
  // The ghost-node rows are first order pointwise; the interior is second order.
  for (std::size_t i = 1; i < errs.size(); ++i)
    CHECK(test::slope(hs[i - 1], errs[i - 1], hs[i], errs[i]) >= 0.9);
}

TEST_CASE("spatial norms of sin(pi x) converge to the analytic values")
{
  const Grid g{1.0, 1025};
  const auto n = spatial_norms(test::sine_profile(g), g);
  CHECK(n.l2 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  CHECK(n.h1_semi == doctest::Approx(M_PI * std::sqrt(0.5)).epsilon(1e-5));
  CHECK(std::abs(n.left_trace) < 1e-15);
}

TEST_CASE("norms of constants and of the identity map")
{
  const Grid g{2.0, 33};
  const auto c = spatial_norms(RVector(RVector::Constant(33, 3.0)), g);
  CHECK(c.l2 == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(c.h1_semi < 1e-12);
  const Grid u{1.0, 17};
  CHECK(spatial_norms(u.coordinates(), u).h1_semi == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gradient and second derivative are exact on low-order polynomials")
{
  const Grid g{1.0, 11};
  const RVector x = g.coordinates();
  const RVector q = x.array().square();
  const RVector dq = gradient(q, g.spacing());
  CHECK((dq - 2.0 * x).cwiseAbs().maxCoeff() < 1e-12);
  const RVector c = x.array().cube();
  const RVector ddc = second_derivative(c, g.spacing());
  CHECK((ddc - 6.0 * x).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("dual norm of sin(pi x) approaches the eigenvalue formula")
{
  const double expected = 0.5 / (1.0 + M_PI * M_PI);
  double prev_err = 1.0;
  for (int n : {65, 129, 257, 513})
  {
    const Grid g{1.0, n};
    const double v = dual_norm_h1star(test::sine_profile(g), g, BoundaryCondition::dirichlet(),
                                      BoundaryCondition::dirichlet());
    const double err = std::abs(v * v - expected);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-5 * expected);
}

TEST_CASE("dual norm is zero at zero and absolutely homogeneous")
{
  const Grid g{1.0, 33};
  const auto l = BoundaryCondition::impedance(1.0);
  const auto r = BoundaryCondition::absorbing(2.0);
  CHECK(dual_norm_h1star(RVector(RVector::Zero(33)), g, l, r) == 0.0);
  const auto u = test::random_field(0, 33, 4);
  const double a = dual_norm_h1star(u[0], g, l, r);
  CHECK(dual_norm_h1star(CVector(Complex(-2.5, 1.0) * u[0]), g, l, r) ==
        doctest::Approx(std::abs(Complex(-2.5, 1.0)) * a).epsilon(1e-13));
}

TEST_CASE("dual norm stays below a grid-independent multiple of the L2 norm")
{
  double worst = 0.0;
  for (int n : {33, 129, 513})
  {
    const Grid g{1.0, n};
    for (unsigned seed = 0; seed < 5; ++seed)
    {
      const auto u = test::random_field(0, n, seed);
      const double ratio = dual_norm_h1star(u[0], g, BoundaryCondition::impedance(1.0), BoundaryCondition::neumann()) /
                           spatial_norms(u[0], g).l2;
      worst = std::max(worst, ratio);
    }
  }
  CHECK(worst <= 1.0 + 1e-12);
}
