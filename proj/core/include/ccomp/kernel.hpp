#pragma once

// Dense real matrix primitives and the tolerance policy shared by every
// higher layer. All numerics in the library go through this header.

#include <Eigen/Dense>

#include <cstddef>
#include <utility>

namespace ccomp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thresholds that turn exact linear-algebra predicates into decidable
/// floating-point ones. Every field must lie strictly inside (0, 1).
struct TolerancePolicy {
  double rank_rel = 0x1p-40;     // relative singular-value cut-off
  double rank_abs = 1e-12;       // absolute singular-value floor
  double angle_tol = 1e-9;       // radians
  double subspace_tol = 1e-9;    // max principal-angle sine for equality / membership

  /// Throws ErrorKind::Input if any field is outside (0, 1).
  void validate() const;

  /// Singular values strictly above this count towards the rank.
  double rank_threshold(double sigma_max, Index rows, Index cols) const;

  bool operator==(const TolerancePolicy&) const = default;
};

/// Named tolerance profiles ("default", "strict", "loose").
/// Throws ErrorKind::Input on an unknown name.
TolerancePolicy tolerance_profile(std::string_view name);

struct SvdResult {
  Matrix u;      // rows x k, orthonormal columns
  Vector sigma;  // k values, descending, nonnegative
  Matrix v;      // cols x k, orthonormal columns
};

enum class SvdMode { Thin, Full };

/// Singular value decomposition A = U diag(sigma) V^T.
/// Thin mode returns k = min(rows, cols) columns; full mode returns square
/// U and V, with sigma still of length min(rows, cols).
SvdResult svd(const Matrix& a, SvdMode mode = SvdMode::Thin);

struct EigResult {
  Vector lambda;  // ascending
  Matrix q;       // orthogonal, columns are eigenvectors
};

/// Symmetric eigendecomposition. Rejects inputs whose asymmetry exceeds
/// 1e-10 * (1 + ||A||_2) with ErrorKind::Precondition.
EigResult sym_eig(const Matrix& a);

/// Number of entries of a descending sequence strictly above the rank
/// threshold for a matrix of the given shape.
Index rank_count(const Vector& sigma, double sigma_max, std::pair<Index, Index> dims,
                 const TolerancePolicy& tol);

/// Orthonormal basis (as columns) of the column span of A. The column count
/// equals the numerical rank of A under `tol`. Column signs are normalized so
/// that the entry of largest magnitude in each column is positive.
Matrix orthonormalize(const Matrix& a, const TolerancePolicy& tol);

/// Q factor of a thin QR of a full-column-rank A, with R's diagonal made
/// positive. Column j of Q spans the same flag as columns 0..j of A.
Matrix ordered_orthonormal_factor(const Matrix& a);

/// Orthonormal basis of the numerical right null space of A.
Matrix null_space(const Matrix& a, const TolerancePolicy& tol);

double spectral_norm(const Matrix& a);

/// Smallest singular value counting the trailing min(rows, cols) only;
/// +inf for an empty matrix.
double min_singular_value(const Matrix& a);

/// Largest |A_ij - A_ji|.
double asymmetry(const Matrix& a);

bool all_finite(const Matrix& a);

/// Throws ErrorKind::Input when A holds NaN or Inf.
void require_finite(const Matrix& a, const char* what);

/// Flips column signs so each column's largest-magnitude entry is positive.
void normalize_column_signs(Matrix& a);

/// Clamps x into [lo, hi].
constexpr double clamp_unit(double x, double lo = 0.0, double hi = 1.0) {
  return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace ccomp
