// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_HARMONIC_SOLVER_HPP
#define JMGT_HARMONIC_SOLVER_HPP

#include <string>
#include <vector>

#include "fourier.hpp"
#include "model.hpp"
#include "spatial.hpp"
#include "tridiagonal.hpp"

namespace jmgt
{

// (m^2 w^2 + i tau m^3 w^3) / (c^2 + i m w b) for constant coefficients.
// Diagnostic only; assembly always uses the nodal form.
Complex kappa_squared(int m, double tau, double omega, double b, double c2);

// A_m u_m = rhs with
//   A_m = (-i tau m^3 w^3 - m^2 w^2) I + diag(c^2 + i m w b) (-Delta_h(m)),
//   rhs = -r_m,
// posed on the free (non-Dirichlet) nodes.
struct HarmonicSystem
{
  int harmonic = 0;
  SpatialOperator laplacian;
  Tridiagonal<Complex> matrix;
  CVector rhs;
};

// rhs_harmonic is r_m on all Nx nodes. Throws SingularMeanMode for a
// singular m = 0 operator.
HarmonicSystem assemble_harmonic_system(const Model &model, int harmonic,
                                        const CVector &rhs_harmonic);

// Factorized family {A_m}, m = 0..M, for repeated solves with one model.
class LinearMgtSolver
{
public:
  explicit LinearMgtSolver(const Model &model);

  const Model &model() const { return model_; }

  // u with A_m u_m = -r_m for every m; Dirichlet entries are zero.
  HarmonicField solve(const HarmonicField &rtilde) const;

  // D u on every node (zero on Dirichlet rows).
  HarmonicField apply(const HarmonicField &u) const;

  // Decoupled solve on the free-node layout (used as block preconditioner).
  CVector solve_harmonic(int m, const CVector &reduced_rhs) const;
  CVector apply_harmonic(int m, const CVector &reduced_u) const;

  const SpatialOperator &laplacian(int m) const { return laplacians_[m]; }
  const Tridiagonal<Complex> &matrix(int m) const { return matrices_[m]; }
  const std::vector<int> &free_nodes() const { return laplacians_.front().free_nodes; }

private:
  Model model_;
  std::vector<SpatialOperator> laplacians_;
  std::vector<Tridiagonal<Complex>> matrices_;
  std::vector<TridiagonalLU<Complex>> factors_;
};

// Periodic linear MGT solve with alpha = 1: tau u_ttt + u_tt - c^2 u_xx - b u_txx + r = 0.
HarmonicField solve_linear_mgt(const Model &model, const HarmonicField &rtilde);

// max over m of |A_m u_m + r_m| / (|A_m| |u_m| + |r_m|) in the infinity norm.
double linear_residual(const LinearMgtSolver &solver, const HarmonicField &u,
                       const HarmonicField &rtilde);

enum class BlockStrategy
{
  Auto,
  Direct,
  Iterative,
};

struct LinearizedOptions
{
  BlockStrategy strategy = BlockStrategy::Auto;
  // Auto picks the direct sparse factorization up to this many complex unknowns (M+1) Nx.
  long direct_threshold = 200000;
  double tolerance = 1e-10;
  int max_iterations = 400;
  int restart = 60;
  // Keep tau d_t^3 in the derivative equation; false reproduces the displayed
  // Westervelt derivative equation without the third-order term.
  bool include_tau = true;
};

struct LinearizedSolution
{
  HarmonicField u;
  BlockStrategy strategy_used = BlockStrategy::Direct;
  int iterations = 0;
  double residual = 0.0;  // |(D + C)u + f| / (|Du| + |Cu| + |f|)
};

// Coupling C(u_base) of the linearized nonlinearity in frequency space,
//   Westervelt: 2 eta (u_base du)_tt,
//   Kuznetsov:  2 (eta_tilde u_base_t du_t + grad u_base . grad du)_t,
// truncated to harmonics 0..M. Each output harmonic is a sum over input
// harmonics k in [-M, M], with conjugate symmetry for k < 0.
class BlockCoupling
{
public:
  BlockCoupling(const Model &model, const HarmonicField &u_base, EquationKind kind);

  struct Term
  {
    int out = 0;      // output harmonic m
    int in = 0;       // input harmonic k, may be negative
    bool gradient = false;
    CVector weight;   // nodal multiplier, full length
  };

  const std::vector<Term> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  HarmonicField apply(const HarmonicField &du) const;

private:
  Model model_;
  std::vector<Term> terms_;
};

// Solves D du + C(u_base) du + f_dir = 0 with the same boundary rows as D.
LinearizedSolution solve_linearized(const Model &model, const HarmonicField &u_base,
                                    const HarmonicField &f_dir, EquationKind kind,
                                    const LinearizedOptions &options = {});

}  // namespace jmgt

#endif  // JMGT_HARMONIC_SOLVER_HPP
