// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_TRIDIAGONAL_HPP
#define JMGT_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Core>

namespace jmgt
{

// Tridiagonal matrix: lower[i] = A(i+1, i), diag[i] = A(i, i), upper[i] = A(i, i+1).
template <class T>
struct Tridiagonal
{
  using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

  Vector lower;
  Vector diag;
  Vector upper;

  Tridiagonal() = default;
  explicit Tridiagonal(Eigen::Index n)
    : lower(Vector::Zero(n > 0 ? n - 1 : 0)), diag(Vector::Zero(n)), upper(Vector::Zero(n > 0 ? n - 1 : 0))
  {
  }

  Eigen::Index size() const { return diag.size(); }

  Vector apply(const Vector &x) const
  {
    const Eigen::Index n = size();
    Vector y = diag.cwiseProduct(x);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
    {
      y[i] += upper[i] * x[i + 1];
      y[i + 1] += lower[i] * x[i];
    }
    return y;
  }

  // Scales row i by s[i].
  void scale_rows(const Vector &s)
  {
    diag = diag.cwiseProduct(s);
    for (Eigen::Index i = 0; i + 1 < size(); ++i)
    {
      upper[i] *= s[i];
      lower[i] *= s[i + 1];
    }
  }

  void add_to_diagonal(T shift) { diag.array() += shift; }

  double norm1() const
  {
    double best = 0.0;
    const Eigen::Index n = size();
    for (Eigen::Index j = 0; j < n; ++j)
    {
      double s = std::abs(diag[j]);
      if (j > 0)
        s += std::abs(upper[j - 1]);
      if (j + 1 < n)
        s += std::abs(lower[j]);
      best = std::max(best, s);
    }
    return best;
  }

  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> dense() const
  {
    const Eigen::Index n = size();
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> a = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      a(i, i) = diag[i];
    for (Eigen::Index i = 0; i + 1 < n; ++i)
    {
      a(i, i + 1) = upper[i];
      a(i + 1, i) = lower[i];
    }
    return a;
  }
};

// LU factorization with partial pivoting (LAPACK gttrf/gttrs/gtcon).
// Instantiated for double and std::complex<double>.
template <class T>
class TridiagonalLU
{
public:
  using Vector = typename Tridiagonal<T>::Vector;

  TridiagonalLU() = default;
  explicit TridiagonalLU(const Tridiagonal<T> &a) { factor(a); }

  // Returns false when an exactly zero pivot is met.
  bool factor(const Tridiagonal<T> &a);
  bool singular() const { return singular_; }
  Vector solve(Vector b) const;

  // Reciprocal 1-norm condition estimate of the factored matrix.
  double rcond() const;

private:
  Vector dl_, d_, du_, du2_;
  std::vector<int> ipiv_;
  double anorm_ = 0.0;
  bool singular_ = false;
};

extern template class TridiagonalLU<double>;
extern template class TridiagonalLU<std::complex<double>>;

// cond_1(A) estimate; infinite when A is singular.
template <class T>
double condition_estimate(const Tridiagonal<T> &a)
{
  if (a.size() == 0)
    return 1.0;
  const TridiagonalLU<T> lu(a);
  if (lu.singular())
    return INFINITY;
  const double rc = lu.rcond();
  return rc > 0.0 ? 1.0 / rc : INFINITY;
}

}  // namespace jmgt

#endif  // JMGT_TRIDIAGONAL_HPP
