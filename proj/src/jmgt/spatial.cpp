// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace jmgt
{

CVector SpatialOperator::restrict_to_free(const CVector &full) const
{
  CVector out(size());
  for (int i = 0; i < size(); ++i)
    out[i] = full[free_nodes[i]];
  return out;
}

RVector SpatialOperator::restrict_to_free(const RVector &full) const
{
  RVector out(size());
  for (int i = 0; i < size(); ++i)
    out[i] = full[free_nodes[i]];
  return out;
}

CVector SpatialOperator::extend_from_free(const CVector &reduced, int nodes) const
{
  CVector out = CVector::Zero(nodes);
  for (int i = 0; i < size(); ++i)
    out[free_nodes[i]] = reduced[i];
  return out;
}

SpatialOperator assemble_laplacian(const Grid &grid, const BoundaryCondition &left,
                                   const BoundaryCondition &right, int harmonic, double omega)
{
  SpatialOperator op;
  op.harmonic = harmonic;
  const int nx = grid.nodes;
  const int first = left.is_dirichlet() ? 1 : 0;
  const int last = right.is_dirichlet() ? nx - 2 : nx - 1;
  for (int j = first; j <= last; ++j)
    op.free_nodes.push_back(j);

  const int n = op.size();
  const double h = grid.spacing();
  const double ih2 = 1.0 / (h * h);
  op.matrix = Tridiagonal<Complex>(n);
  op.lumped_weights = RVector::Ones(n);
  for (int i = 0; i < n; ++i)
  {
    op.matrix.diag[i] = 2.0 * ih2;
    if (i + 1 < n)
    {
      op.matrix.upper[i] = -ih2;
      op.matrix.lower[i] = -ih2;
    }
  }
  if (!left.is_dirichlet())
  {
    const Complex kappa = left.robin_coefficient(harmonic, omega);
    op.matrix.diag[0] = 2.0 * ih2 + 2.0 * kappa / h;
    op.matrix.upper[0] = -2.0 * ih2;
    op.lumped_weights[0] = 0.5;
  }
  if (!right.is_dirichlet())
  {
    const Complex kappa = right.robin_coefficient(harmonic, omega);
    op.matrix.diag[n - 1] = 2.0 * ih2 + 2.0 * kappa / h;
    op.matrix.lower[n - 2] = -2.0 * ih2;
    op.lumped_weights[n - 1] = 0.5;
  }
  op.singular = harmonic == 0 && !mean_mode_regular(left, right);
  return op;
}

RVector boundary_damping(const Grid &grid, const BoundaryCondition &left,
                         const BoundaryCondition &right)
{
  const int first = left.is_dirichlet() ? 1 : 0;
  const int last = right.is_dirichlet() ? grid.nodes - 2 : grid.nodes - 1;
  RVector damping = RVector::Zero(last - first + 1);
  const double h = grid.spacing();
  if (!left.is_dirichlet())
    damping[0] = 2.0 * left.beta / h;
  if (!right.is_dirichlet())
    damping[damping.size() - 1] = 2.0 * right.beta / h;
  return damping;
}

RVector trapezoid_weights(const Grid &grid)
{
  RVector w = RVector::Constant(grid.nodes, grid.spacing());
  w[0] *= 0.5;
  w[grid.nodes - 1] *= 0.5;
  return w;
}

std::array<std::pair<int, double>, 3> gradient_stencil(int node, int nodes, double h)
{
  const double s = 0.5 / h;
  if (node == 0)
    return {{{0, -3.0 * s}, {1, 4.0 * s}, {2, -s}}};
  if (node == nodes - 1)
    return {{{nodes - 1, 3.0 * s}, {nodes - 2, -4.0 * s}, {nodes - 3, s}}};
  return {{{node - 1, -s}, {node + 1, s}, {node, 0.0}}};
}

double l2_squared(const CVector &v, const Grid &grid)
{
  const RVector w = trapezoid_weights(grid);
  return w.dot(v.cwiseAbs2());
}

SpatialNorms spatial_norms(const CVector &v, const Grid &grid)
{
  SpatialNorms out;
  out.l2 = std::sqrt(l2_squared(v, grid));
  out.h1_semi = std::sqrt(l2_squared(gradient(v, grid.spacing()), grid));
  out.left_trace = v[0];
  out.right_trace = v[v.size() - 1];
  return out;
}

SpatialNorms spatial_norms(const RVector &v, const Grid &grid)
{
  return spatial_norms(CVector(v.cast<Complex>()), grid);
}

DualNormH1Star::DualNormH1Star(const Grid &grid, const BoundaryCondition &left,
                               const BoundaryCondition &right)
  : grid_(grid), op_(assemble_laplacian(grid, left, right, 0, 0.0))
{
  Tridiagonal<Complex> shifted = op_.matrix;
  shifted.add_to_diagonal(1.0);
  const bool ok = lu_.factor(shifted);
  assert(ok && "I - Delta_h is positive definite");
  (void)ok;
}

double DualNormH1Star::squared(const CVector &v) const
{
  const CVector rhs = op_.restrict_to_free(v);
  const CVector z = lu_.solve(rhs);
  const double h = grid_.spacing();
  Complex acc = 0.0;
  for (int i = 0; i < op_.size(); ++i)
    acc += op_.lumped_weights[i] * std::conj(rhs[i]) * z[i];
  return std::max(0.0, h * acc.real());
}

double dual_norm_h1star(const CVector &v, const Grid &grid, const BoundaryCondition &left,
                        const BoundaryCondition &right)
{
  return std::sqrt(DualNormH1Star(grid, left, right).squared(v));
}

double dual_norm_h1star(const RVector &v, const Grid &grid, const BoundaryCondition &left,
                        const BoundaryCondition &right)
{
  return dual_norm_h1star(CVector(v.cast<Complex>()), grid, left, right);
}

}  // namespace jmgt
