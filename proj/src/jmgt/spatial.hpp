// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_SPATIAL_HPP
#define JMGT_SPATIAL_HPP

#include <array>
#include <utility>
#include <vector>

#include "model.hpp"
#include "tridiagonal.hpp"
#include "types.hpp"

namespace jmgt
{

// Discrete -d^2/dx^2 for harmonic m, restricted to the non-Dirichlet nodes.
//
// Interior rows are (-1, 2, -1)/h^2. An endpoint carrying
//   du/dn + (i m omega beta + gamma) u = 0
// is closed by a ghost node, giving (2 + 2 h kappa, -2)/h^2. Dirichlet
// endpoints are eliminated; free_nodes maps reduced rows back to grid nodes.
// Row-scaling by lumped_weights (1/2 on Robin rows, 1 elsewhere) yields a
// complex-symmetric matrix.
struct SpatialOperator
{
  int harmonic = 0;
  std::vector<int> free_nodes;
  Tridiagonal<Complex> matrix;
  RVector lumped_weights;
  bool singular = false;

  int size() const { return static_cast<int>(free_nodes.size()); }

  CVector restrict_to_free(const CVector &full) const;
  CVector extend_from_free(const CVector &reduced, int nodes) const;
  RVector restrict_to_free(const RVector &full) const;
};

SpatialOperator assemble_laplacian(const Grid &grid, const BoundaryCondition &left,
                                   const BoundaryCondition &right, int harmonic, double omega);

// Diagonal B with -Delta_h(m) = -Delta_h(0) + i m omega B: 2 beta/h on
// absorbing rows, zero elsewhere (reduced indexing).
RVector boundary_damping(const Grid &grid, const BoundaryCondition &left,
                         const BoundaryCondition &right);

// Trapezoidal quadrature weights (h/2 at the ends).
RVector trapezoid_weights(const Grid &grid);

// One-sided at the ends, central inside; second order everywhere.
std::array<std::pair<int, double>, 3> gradient_stencil(int node, int nodes, double h);

template <class Vec>
Vec gradient(const Vec &v, double h)
{
  const auto n = static_cast<int>(v.size());
  Vec g(n);
  for (int j = 0; j < n; ++j)
  {
    g[j] = 0.0;
    for (const auto &[col, w] : gradient_stencil(j, n, h))
      g[j] += w * v[col];
  }
  return g;
}

// Nodal second derivative; four-point one-sided rows at the ends.
template <class Vec>
Vec second_derivative(const Vec &v, double h)
{
  const auto n = static_cast<int>(v.size());
  const double ih2 = 1.0 / (h * h);
  Vec d(n);
  for (int j = 1; j + 1 < n; ++j)
    d[j] = (v[j - 1] - 2.0 * v[j] + v[j + 1]) * ih2;
  if (n >= 4)
  {
    d[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) * ih2;
    d[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) * ih2;
  }
  else
  {
    d[0] = d[1];
    d[n - 1] = d[1];
  }
  return d;
}

struct SpatialNorms
{
  double l2 = 0.0;
  double h1_semi = 0.0;
  Complex left_trace;
  Complex right_trace;
};

SpatialNorms spatial_norms(const CVector &v, const Grid &grid);
SpatialNorms spatial_norms(const RVector &v, const Grid &grid);

// Squared trapezoidal L2 norm of a complex nodal vector.
double l2_squared(const CVector &v, const Grid &grid);

// Discrete H^1(Omega)* norm: sqrt(<v, z>) with (I - Delta_h) z = v, using the
// m = 0 boundary rows. Values at Dirichlet nodes are ignored.
double dual_norm_h1star(const CVector &v, const Grid &grid, const BoundaryCondition &left,
                        const BoundaryCondition &right);
double dual_norm_h1star(const RVector &v, const Grid &grid, const BoundaryCondition &left,
                        const BoundaryCondition &right);

// Reusable factorization of I - Delta_h for many dual-norm evaluations.
class DualNormH1Star
{
public:
  DualNormH1Star(const Grid &grid, const BoundaryCondition &left, const BoundaryCondition &right);
  double squared(const CVector &v) const;

private:
  Grid grid_;
  SpatialOperator op_;
  TridiagonalLU<Complex> lu_;
};

}  // namespace jmgt

#endif  // JMGT_SPATIAL_HPP
