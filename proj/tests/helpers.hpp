#pragma once

#include <ccomp/ccomp.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>
#include <vector>

namespace ccomp::test {

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// unit vector e_i (1-based, like the usual notation)
inline Vector e(Index i, Index n) {
  Vector v = Vector::Zero(n);
  v(i - 1) = 1.0;
  return v;
}

inline Subspace span(std::initializer_list<Vector> vs, Index n) {
  std::vector<Vector> cols(vs);
  return Subspace::from_spanning(cols, n);
}

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix a(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

inline double max_abs(const Matrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

/// Independent orthogonal projector oracle: A (AᵀA)⁻¹ Aᵀ through a normal-equation solve.
inline Matrix projector_oracle(const Matrix& a) {
  if (a.cols() == 0) return Matrix::Zero(a.rows(), a.rows());
  return a * (a.transpose() * a).ldlt().solve(a.transpose());
}

/// Same span check without the library: projectors agree.
inline bool same_span(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  if (a.rows() != b.rows()) return false;
  return max_abs(projector_oracle(a) - projector_oracle(b)) <= tol;
}

inline double pi() { return std::acos(-1.0); }

}  // namespace ccomp::test

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(::ccomp::test::max_abs((a) - (b)), (tol))

#define EXPECT_ERROR_KIND(stmt, kind_)                                   \
  do {                                                                   \
    try {                                                                \
      stmt;                                                              \
      ADD_FAILURE() << "expected ccomp::Error of kind " << to_string(kind_); \
    } catch (const ::ccomp::Error& err_) {                               \
      EXPECT_EQ(err_.kind(), kind_) << err_.what();                      \
    }                                                                    \
  } while (0)
