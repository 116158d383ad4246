// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "tridiagonal.hpp"

#include <complex>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace jmgt
{

namespace
{

lapack_int gttrf(lapack_int n, double *dl, double *d, double *du, double *du2, lapack_int *ipiv)
{
  return LAPACKE_dgttrf(n, dl, d, du, du2, ipiv);
}
lapack_int gttrf(lapack_int n, std::complex<double> *dl, std::complex<double> *d, std::complex<double> *du,
                 std::complex<double> *du2, lapack_int *ipiv)
{
  return LAPACKE_zgttrf(n, dl, d, du, du2, ipiv);
}

lapack_int gttrs(lapack_int n, const double *dl, const double *d, const double *du, const double *du2,
                 const lapack_int *ipiv, double *b)
{
  return LAPACKE_dgttrs(LAPACK_COL_MAJOR, 'N', n, 1, dl, d, du, du2, ipiv, b, n);
}
lapack_int gttrs(lapack_int n, const std::complex<double> *dl, const std::complex<double> *d,
                 const std::complex<double> *du, const std::complex<double> *du2, const lapack_int *ipiv,
                 std::complex<double> *b)
{
  return LAPACKE_zgttrs(LAPACK_COL_MAJOR, 'N', n, 1, dl, d, du, du2, ipiv, b, n);
}

lapack_int gtcon(lapack_int n, const double *dl, const double *d, const double *du, const double *du2,
                 const lapack_int *ipiv, double anorm, double *rcond)
{
  return LAPACKE_dgtcon('1', n, dl, d, du, du2, ipiv, anorm, rcond);
}
lapack_int gtcon(lapack_int n, const std::complex<double> *dl, const std::complex<double> *d,
                 const std::complex<double> *du, const std::complex<double> *du2, const lapack_int *ipiv,
                 double anorm, double *rcond)
{
  return LAPACKE_zgtcon('1', n, dl, d, du, du2, ipiv, anorm, rcond);
}

}  // namespace

template <class T>
bool TridiagonalLU<T>::factor(const Tridiagonal<T> &a)
{
  const auto n = static_cast<lapack_int>(a.size());
  dl_ = a.lower;
  d_ = a.diag;
  du_ = a.upper;
  du2_ = Vector::Zero(n > 2 ? n - 2 : 0);
  ipiv_.assign(static_cast<std::size_t>(n), 0);
  anorm_ = a.norm1();
  singular_ = false;
  if (n == 0)
    return true;
  const lapack_int info = gttrf(n, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data());
  singular_ = info != 0;
  return !singular_;
}

template <class T>
typename TridiagonalLU<T>::Vector TridiagonalLU<T>::solve(Vector b) const
{
  const auto n = static_cast<lapack_int>(d_.size());
  if (n == 0)
    return b;
  gttrs(n, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data(), b.data());
  return b;
}

template <class T>
double TridiagonalLU<T>::rcond() const
{
  const auto n = static_cast<lapack_int>(d_.size());
  if (n == 0)
    return 1.0;
  if (singular_)
    return 0.0;
  double rc = 0.0;
  if (gtcon(n, dl_.data(), d_.data(), du_.data(), du2_.data(), ipiv_.data(), anorm_, &rc) != 0)
    return 0.0;
  return rc;
}

template class TridiagonalLU<double>;
template class TridiagonalLU<std::complex<double>>;

}  // namespace jmgt
