#include "sampling.hpp"

#include <cmath>

namespace ccomp::cli {

Matrix Sampler::gaussian(Index rows, Index cols) {
  std::normal_distribution<double> d(0.0, 1.0);
  Matrix a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) a(i, j) = d(rng_);
  }
  return a;
}

Index Sampler::uniform(Index lo, Index hi) {
  std::uniform_int_distribution<Index> d(lo, hi);
  return d(rng_);
}

double Sampler::uniform_real(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng_);
}

Subspace Sampler::subspace(Index n, Index dim, const TolerancePolicy& tol) {
  if (dim == 0) return Subspace::zero(n);
  return Subspace::from_columns(gaussian(n, dim), tol);
}

Matrix Sampler::invertible(Index n, double cond) {
  const Matrix q1 = ordered_orthonormal_factor(gaussian(n, n));
  const Matrix q2 = ordered_orthonormal_factor(gaussian(n, n));
  Vector s(n);
  const double top = std::log(cond);
  for (Index i = 0; i < n; ++i) s(i) = std::exp(uniform_real(0.0, top));
  if (n > 0) {
    s(0) = 1.0;
    if (n > 1) s(n - 1) = cond;
  }
  return q1 * s.asDiagonal() * q2.transpose();
}

SampledPair random_pair(Sampler& s, Index n, const TolerancePolicy& tol) {
  const Index dm = s.uniform(0, n);
  const Index dn = s.uniform(0, n);
  Subspace m = s.subspace(n, dm, tol);
  Subspace nn = s.subspace(n, dn, tol);
  return {std::move(m), std::move(nn)};
}

SampledPair random_equal_pair(Sampler& s, Index n, const TolerancePolicy& tol) {
  const Index d = s.uniform(0, n);
  Subspace m = s.subspace(n, d, tol);
  Subspace nn = s.subspace(n, d, tol);
  return {std::move(m), std::move(nn)};
}

}  // namespace ccomp::cli
