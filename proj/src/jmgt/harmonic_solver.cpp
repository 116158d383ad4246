// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "harmonic_solver.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

#include "error.hpp"

namespace jmgt
{
class MatrixFreeOperator;
}

namespace Eigen::internal
{
template <>
struct traits<jmgt::MatrixFreeOperator> : public traits<SparseMatrix<double>>
{
};
}  // namespace Eigen::internal

namespace jmgt
{

// y = op(x) as an Eigen operand for the iterative solvers.
class MatrixFreeOperator : public Eigen::EigenBase<MatrixFreeOperator>
{
public:
  using Scalar = double;
  using RealScalar = double;
  using StorageIndex = int;
  enum
  {
    ColsAtCompileTime = Eigen::Dynamic,
    MaxColsAtCompileTime = Eigen::Dynamic,
    IsRowMajor = false
  };

  MatrixFreeOperator(Eigen::Index n, std::function<Eigen::VectorXd(const Eigen::VectorXd &)> op)
    : n_(n), op_(std::move(op))
  {
  }

  Eigen::Index rows() const { return n_; }
  Eigen::Index cols() const { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd &x) const { return op_(x); }

  template <typename Rhs>
  Eigen::Product<MatrixFreeOperator, Rhs, Eigen::AliasFreeProduct> operator*(const Eigen::MatrixBase<Rhs> &x) const
  {
    return Eigen::Product<MatrixFreeOperator, Rhs, Eigen::AliasFreeProduct>(*this, x.derived());
  }

private:
  Eigen::Index n_;
  std::function<Eigen::VectorXd(const Eigen::VectorXd &)> op_;
};

}  // namespace jmgt

namespace Eigen::internal
{
template <typename Rhs>
struct generic_product_impl<jmgt::MatrixFreeOperator, Rhs, SparseShape, DenseShape, GemvProduct>
  : generic_product_impl_base<jmgt::MatrixFreeOperator, Rhs, generic_product_impl<jmgt::MatrixFreeOperator, Rhs>>
{
  template <typename Dest>
  static void scaleAndAddTo(Dest &dst, const jmgt::MatrixFreeOperator &lhs, const Rhs &rhs, const double &alpha)
  {
    dst.noalias() += alpha * lhs.apply(rhs);
  }
};
}  // namespace Eigen::internal

namespace jmgt
{

Complex kappa_squared(int m, double tau, double omega, double b, double c2)
{
  const double mw = m * omega;
  return Complex(mw * mw, tau * mw * mw * mw) / Complex(c2, mw * b);
}

namespace
{

// A_m on the free nodes of `lap`.
Tridiagonal<Complex> harmonic_matrix(const Model &model, const SpatialOperator &lap, int m)
{
  const auto &p = model.params;
  const double mw = m * p.omega();
  const Complex shift(-mw * mw, -p.tau * mw * mw * mw);
  CVector row_scale(lap.size());
  for (int i = 0; i < lap.size(); ++i)
  {
    const int node = lap.free_nodes[i];
    row_scale[i] = Complex(p.c2[node], mw * p.b[node]);
  }
  Tridiagonal<Complex> a = lap.matrix;
  a.scale_rows(row_scale);
  a.add_to_diagonal(shift);
  return a;
}

double inf_norm_tridiagonal(const Tridiagonal<Complex> &a)
{
  const Eigen::Index n = a.size();
  double best = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
  {
    double s = std::abs(a.diag[i]);
    if (i + 1 < n)
      s += std::abs(a.upper[i]);
    if (i > 0)
      s += std::abs(a.lower[i - 1]);
    best = std::max(best, s);
  }
  return best;
}

double residual_ratio(const Tridiagonal<Complex> &a, const CVector &x, const CVector &rhs)
{
  const double num = (a.apply(x) - rhs).cwiseAbs().maxCoeff();
  const double den = inf_norm_tridiagonal(a) * x.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
  return den > 0.0 ? num / den : 0.0;
}

constexpr double kResidualContract = 1e-10;

}  // namespace

HarmonicSystem assemble_harmonic_system(const Model &model, int harmonic,
                                        const CVector &rhs_harmonic)
{
  HarmonicSystem sys;
  sys.harmonic = harmonic;
  sys.laplacian = assemble_laplacian(model.grid, model.left, model.right, harmonic,
                                     model.params.omega());
  if (sys.laplacian.singular)
    throw Error(ErrorKind::SingularMeanMode,
                "mean-mode operator is singular: no dirichlet or impedance endpoint");
  sys.matrix = harmonic_matrix(model, sys.laplacian, harmonic);
  sys.rhs = -sys.laplacian.restrict_to_free(rhs_harmonic);
  return sys;
}

LinearMgtSolver::LinearMgtSolver(const Model &model) : model_(model)
{
  const int M = model.harmonics;
  laplacians_.reserve(M + 1);
  for (int m = 0; m <= M; ++m)
  {
    laplacians_.push_back(
        assemble_laplacian(model.grid, model.left, model.right, m, model.params.omega()));
    if (laplacians_.back().singular)
      throw Error(ErrorKind::SingularMeanMode,
                  "mean-mode operator is singular: no dirichlet or impedance endpoint");
    matrices_.push_back(harmonic_matrix(model, laplacians_.back(), m));
    factors_.emplace_back(matrices_.back());
    if (factors_.back().singular())
      throw Error(ErrorKind::SolveFailure,
                  "harmonic " + std::to_string(m) + " system has a zero pivot");
  }
}

CVector LinearMgtSolver::solve_harmonic(int m, const CVector &reduced_rhs) const
{
  CVector x = factors_[m].solve(reduced_rhs);
  double ratio = residual_ratio(matrices_[m], x, reduced_rhs);
  if (ratio > kResidualContract)
  {
    // one step of iterative refinement
    x += factors_[m].solve(reduced_rhs - matrices_[m].apply(x));
    ratio = residual_ratio(matrices_[m], x, reduced_rhs);
  }
  if (!(ratio <= kResidualContract))
  {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "harmonic %d: relative residual %.3e exceeds %.0e (cond_1 estimate %.3e)", m,
                  ratio, kResidualContract, condition_estimate(matrices_[m]));
    throw Error(ErrorKind::SolveFailure, buf);
  }
  return x;
}

CVector LinearMgtSolver::apply_harmonic(int m, const CVector &reduced_u) const
{
  return matrices_[m].apply(reduced_u);
}

HarmonicField LinearMgtSolver::solve(const HarmonicField &rtilde) const
{
  const int M = model_.harmonics;
  const int nx = model_.grid.nodes;
  HarmonicField u(M, nx);
  for (int m = 0; m <= std::min(M, rtilde.harmonics()); ++m)
  {
    const auto &lap = laplacians_[m];
    u[m] = lap.extend_from_free(solve_harmonic(m, -lap.restrict_to_free(rtilde[m])), nx);
  }
  u.enforce_real_mean();
  return u;
}

HarmonicField LinearMgtSolver::apply(const HarmonicField &u) const
{
  const int M = model_.harmonics;
  const int nx = model_.grid.nodes;
  HarmonicField out(M, nx);
  for (int m = 0; m <= M; ++m)
  {
    const auto &lap = laplacians_[m];
    out[m] = lap.extend_from_free(matrices_[m].apply(lap.restrict_to_free(u[m])), nx);
  }
  return out;
}

HarmonicField solve_linear_mgt(const Model &model, const HarmonicField &rtilde)
{
  return LinearMgtSolver(model).solve(rtilde);
}

double linear_residual(const LinearMgtSolver &solver, const HarmonicField &u,
                       const HarmonicField &rtilde)
{
  double worst = 0.0;
  for (int m = 0; m <= solver.model().harmonics; ++m)
  {
    const auto &lap = solver.laplacian(m);
    const CVector x = lap.restrict_to_free(u[m]);
    const CVector rhs = -lap.restrict_to_free(rtilde[m]);
    worst = std::max(worst, residual_ratio(solver.matrix(m), x, rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Block-coupled linearized system

BlockCoupling::BlockCoupling(const Model &model, const HarmonicField &u_base, EquationKind kind)
  : model_(model)
{
  if (kind == EquationKind::Linear)
    return;
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  const double w = model.params.omega();
  const double h = model.grid.spacing();
  const HarmonicField base = u_base.resized(M);

  auto base_at = [&](int j) -> CVector { return j >= 0 ? base[j] : CVector(base[-j].conjugate()); };
  std::vector<CVector> grads(2 * M + 1);
  if (kind == EquationKind::Kuznetsov)
    for (int j = -M; j <= M; ++j)
      grads[j + M] = gradient(base_at(j), h);

  const CVector eta = model.params.eta.cast<Complex>();
  const CVector eta_tilde = model.params.eta_tilde.cast<Complex>();
  for (int m = 1; m <= M; ++m)
  {
    for (int k = -M; k <= M; ++k)
    {
      const int j = m - k;
      if (j < -M || j > M)
        continue;
      const CVector ub = base_at(j);
      if (ub.cwiseAbs().maxCoeff() == 0.0)
        continue;
      if (kind == EquationKind::Westervelt)
      {
        Term t{m, k, false, CVector((-(m * w) * (m * w) * 2.0) * eta.cwiseProduct(ub))};
        terms_.push_back(std::move(t));
      }
      else
      {
        const Complex dm(0.0, m * w), dj(0.0, j * w), dk(0.0, k * w);
        if (k != 0)
          terms_.push_back(Term{m, k, false, CVector((dm * 2.0 * dj * dk) * eta_tilde.cwiseProduct(ub))});
        terms_.push_back(Term{m, k, true, CVector((dm * 2.0) * grads[j + M])});
      }
    }
  }
  (void)nx;
}

HarmonicField BlockCoupling::apply(const HarmonicField &du) const
{
  const int M = model_.harmonics;
  const double h = model_.grid.spacing();
  HarmonicField out(M, model_.grid.nodes);
  for (const auto &t : terms_)
  {
    CVector z = t.in >= 0 ? du[t.in] : CVector(du[-t.in].conjugate());
    if (t.gradient)
      z = gradient(z, h);
    out[t.out] += t.weight.cwiseProduct(z);
  }
  return out;
}

namespace
{

// Real unknown layout: Re u_0 on the free nodes, then (Re u_k, Im u_k) for k = 1..M.
struct BlockLayout
{
  int harmonics = 0;
  int n = 0;

  int offset(int k) const { return k == 0 ? 0 : n + 2 * (k - 1) * n; }
  int size() const { return n + 2 * harmonics * n; }
  int re(int k, int i) const { return offset(k) + i; }
  int im(int k, int i) const { return offset(k) + n + i; }
};

Eigen::VectorXd pack(const BlockLayout &layout, const SpatialOperator &lap, const HarmonicField &u)
{
  Eigen::VectorXd y(layout.size());
  for (int k = 0; k <= layout.harmonics; ++k)
    for (int i = 0; i < layout.n; ++i)
    {
      const Complex z = u[k][lap.free_nodes[i]];
      y[layout.re(k, i)] = z.real();
      if (k > 0)
        y[layout.im(k, i)] = z.imag();
    }
  return y;
}

HarmonicField unpack(const BlockLayout &layout, const SpatialOperator &lap, const Eigen::VectorXd &y,
                     int nodes)
{
  HarmonicField u(layout.harmonics, nodes);
  for (int k = 0; k <= layout.harmonics; ++k)
    for (int i = 0; i < layout.n; ++i)
      u[k][lap.free_nodes[i]] =
          Complex(y[layout.re(k, i)], k > 0 ? y[layout.im(k, i)] : 0.0);
  return u;
}

class TripletSink
{
public:
  explicit TripletSink(const BlockLayout &layout) : layout_(layout) {}

  // Adds c * z_col (or c * conj(z_col)) of input harmonic k into row `row` of output harmonic m.
  void add(int m, int row, int k, int col, Complex c, bool conjugate)
  {
    const double cr = c.real(), ci = c.imag();
    const double sy = conjugate ? -1.0 : 1.0;
    const int out_re = layout_.re(m, row);
    const int in_re = layout_.re(k, col);
    push(out_re, in_re, cr);
    if (k > 0)
      push(out_re, layout_.im(k, col), -ci * sy);
    if (m > 0)
    {
      const int out_im = layout_.im(m, row);
      push(out_im, in_re, ci);
      if (k > 0)
        push(out_im, layout_.im(k, col), cr * sy);
    }
  }

  std::vector<Eigen::Triplet<double>> &triplets() { return triplets_; }

private:
  void push(int r, int c, double v)
  {
    if (v != 0.0)
      triplets_.emplace_back(r, c, v);
  }

  const BlockLayout &layout_;
  std::vector<Eigen::Triplet<double>> triplets_;
};

double free_norm(const SpatialOperator &lap, const HarmonicField &v)
{
  double s = 0.0;
  for (int m = 0; m <= v.harmonics(); ++m)
    s += lap.restrict_to_free(v[m]).squaredNorm();
  return std::sqrt(s);
}

HarmonicField solve_direct(const LinearMgtSolver &solver, const BlockCoupling &coupling,
                           const HarmonicField &f_dir, const BlockLayout &layout)
{
  const Model &model = solver.model();
  const auto &lap0 = solver.laplacian(0);
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  const double h = model.grid.spacing();

  std::vector<int> reduced_index(nx, -1);
  for (int i = 0; i < layout.n; ++i)
    reduced_index[lap0.free_nodes[i]] = i;

  TripletSink sink(layout);
  for (int m = 0; m <= M; ++m)
  {
    const auto &a = solver.matrix(m);
    for (int i = 0; i < layout.n; ++i)
    {
      sink.add(m, i, m, i, a.diag[i], false);
      if (i + 1 < layout.n)
      {
        sink.add(m, i, m, i + 1, a.upper[i], false);
        sink.add(m, i + 1, m, i, a.lower[i], false);
      }
    }
  }
  for (const auto &t : coupling.terms())
  {
    const int k = std::abs(t.in);
    const bool conj = t.in < 0;
    for (int i = 0; i < layout.n; ++i)
    {
      const int node = lap0.free_nodes[i];
      const Complex wt = t.weight[node];
      if (wt == Complex(0.0))
        continue;
      if (!t.gradient)
      {
        sink.add(t.out, i, k, i, wt, conj);
        continue;
      }
      for (const auto &[col, g] : gradient_stencil(node, nx, h))
      {
        const int j = reduced_index[col];
        if (j >= 0 && g != 0.0)
          sink.add(t.out, i, k, j, wt * g, conj);
      }
    }
  }
  Eigen::SparseMatrix<double> a(layout.size(), layout.size());
  a.setFromTriplets(sink.triplets().begin(), sink.triplets().end());
  a.makeCompressed();

  HarmonicField neg_f = f_dir.resized(M);
  neg_f *= -1.0;
  const Eigen::VectorXd rhs = pack(layout, lap0, neg_f);

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorKind::SolveFailure, "block factorization failed: " + lu.lastErrorMessage());
  const Eigen::VectorXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorKind::SolveFailure, "block solve failed");
  return unpack(layout, lap0, x, nx);
}

}  // namespace

LinearizedSolution solve_linearized(const Model &model, const HarmonicField &u_base,
                                    const HarmonicField &f_dir, EquationKind kind,
                                    const LinearizedOptions &options)
{
  const Model operator_model = options.include_tau ? model : with_tau(model, 0.0);
  const LinearMgtSolver solver(operator_model);
  const BlockCoupling coupling(model, u_base, kind);
  const auto &lap0 = solver.laplacian(0);
  const int M = model.harmonics;
  const int nx = model.grid.nodes;
  const BlockLayout layout{M, lap0.size()};

  BlockStrategy strategy = options.strategy;
  if (strategy == BlockStrategy::Auto)
    strategy = static_cast<long>(M + 1) * nx <= options.direct_threshold ? BlockStrategy::Direct
                                                                           : BlockStrategy::Iterative;

  LinearizedSolution out;
  out.strategy_used = strategy;
  const HarmonicField f = f_dir.resized(M);
  if (strategy == BlockStrategy::Direct)
  {
    out.u = solve_direct(solver, coupling, f, layout);
  }
  else
  {
    // (I + D^{-1} C) du = -D^{-1} f
    auto precond_coupling = [&](const HarmonicField &du) {
      const HarmonicField c = coupling.apply(du);
      HarmonicField z(M, nx);
      for (int m = 0; m <= M; ++m)
      {
        const auto &lap = solver.laplacian(m);
        z[m] = lap.extend_from_free(solver.solve_harmonic(m, lap.restrict_to_free(c[m])), nx);
      }
      return z;
    };
    const Eigen::VectorXd rhs = pack(layout, lap0, solver.solve(f));
    const MatrixFreeOperator op(rhs.size(), [&](const Eigen::VectorXd &y) -> Eigen::VectorXd {
      const HarmonicField du = unpack(layout, lap0, y, nx);
      return y + pack(layout, lap0, precond_coupling(du));
    });
    Eigen::GMRES<MatrixFreeOperator, Eigen::IdentityPreconditioner> gmres;
    gmres.set_restart(options.restart);
    gmres.setMaxIterations(options.max_iterations);
    gmres.setTolerance(0.1 * options.tolerance);
    gmres.compute(op);
    const Eigen::VectorXd x = gmres.solve(rhs);
    out.u = unpack(layout, lap0, x, nx);
    out.iterations = static_cast<int>(gmres.iterations());
  }
  out.u.enforce_real_mean();

  const HarmonicField du = solver.apply(out.u);
  const HarmonicField cu = coupling.apply(out.u);
  const double scale = free_norm(lap0, du) + free_norm(lap0, cu) + free_norm(lap0, f);
  const double rnorm = free_norm(lap0, du + cu + f);
  out.residual = scale > 0.0 ? rnorm / scale : rnorm;
  if (!(out.residual <= options.tolerance))
  {
    char buf[200];
    std::snprintf(buf, sizeof buf, "linearized solve residual %.3e after %d iterations (tolerance %.0e)",
                  out.residual, out.iterations, options.tolerance);
    throw Error(ErrorKind::NonConvergedIteration, buf);
  }
  return out;
}

}  // namespace jmgt
