#pragma once

#include "ccomp/kernel.hpp"

#include <span>
#include <vector>

namespace ccomp {

/// A linear subspace of R^n stored through an orthonormal basis (columns of
/// an n x k matrix). The zero subspace is an n x 0 basis.
class Subspace {
 public:
  /// Adopts `basis` as-is. Its columns must be orthonormal to 1e-10,
  /// otherwise ErrorKind::Input is thrown.
  explicit Subspace(Matrix basis);

  static Subspace zero(Index n);
  static Subspace full(Index n);

  /// Span of arbitrary (possibly dependent) vectors of length n.
  static Subspace from_spanning(std::span<const Vector> vectors, Index n,
                                const TolerancePolicy& tol = {});

  /// Span of the columns of `a`.
  static Subspace from_columns(const Matrix& a, const TolerancePolicy& tol = {});

  Index ambient_dim() const noexcept { return basis_.rows(); }
  Index dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return basis_.cols() == 0; }

 private:
  Matrix basis_;
};

Subspace orthocomplement(const Subspace& m);

/// M ∩ N from the near-null space of [B_M | -B_N].
Subspace intersect(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

Subspace sum(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// Orthogonal complement of `inner` inside `outer` (outer ⊖ inner).
Subspace relative_complement(const Subspace& outer, const Subspace& inner,
                             const TolerancePolicy& tol = {});

bool contains(const Subspace& m, const Vector& x, const TolerancePolicy& tol = {});

/// True when every basis vector of `inner` lies in `outer`.
bool is_subspace_of(const Subspace& inner, const Subspace& outer, const TolerancePolicy& tol = {});

bool equals(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// Orthogonal projector P_M = B_M B_M^T.
Matrix projector(const Subspace& m);

/// Largest principal angle between two subspaces of equal dimension
/// (π/2 when the dimensions differ, 0 for two zero subspaces).
double subspace_distance(const Subspace& m, const Subspace& n);

/// Image A(M) of a subspace under a linear map (an n' x n matrix).
Subspace image(const Matrix& a, const Subspace& m, const TolerancePolicy& tol = {});

/// Throws ErrorKind::Input unless both subspaces live in the same ambient space.
void require_same_ambient(const Subspace& m, const Subspace& n, const char* op);

}  // namespace ccomp
