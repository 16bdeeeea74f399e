#include "ccomp/subspace.hpp"

#include "ccomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ccomp {

namespace {

constexpr double kBasisTol = 1e-10;

}  // namespace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  require_finite(basis_, "Subspace");
  if (basis_.cols() > basis_.rows()) {
    fail(ErrorKind::Input, "Subspace: more basis columns than ambient dimension");
  }
  if (basis_.cols() > 0) {
    const Matrix gram = basis_.transpose() * basis_;
    const double err =
        (gram - Matrix::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
    if (err > kBasisTol) {
      fail(ErrorKind::Input, "Subspace: basis columns are not orthonormal");
    }
  }
}

Subspace Subspace::zero(Index n) { return Subspace(Matrix(n, 0)); }

Subspace Subspace::full(Index n) { return Subspace(Matrix::Identity(n, n)); }

Subspace Subspace::from_spanning(std::span<const Vector> vectors, Index n,
                                 const TolerancePolicy& tol) {
  if (n < 0) fail(ErrorKind::Input, "from_spanning: negative ambient dimension");
  Matrix a(n, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) {
      fail(ErrorKind::Input, "from_spanning: vector " + std::to_string(j) + " has length " +
                                 std::to_string(vectors[j].size()) + ", expected " +
                                 std::to_string(n));
    }
    a.col(static_cast<Index>(j)) = vectors[j];
  }
  return from_columns(a, tol);
}

Subspace Subspace::from_columns(const Matrix& a, const TolerancePolicy& tol) {
  return Subspace(orthonormalize(a, tol));
}

void require_same_ambient(const Subspace& m, const Subspace& n, const char* op) {
  if (m.ambient_dim() != n.ambient_dim()) {
    fail(ErrorKind::Input, std::string(op) + ": ambient dimensions differ (" +
                               std::to_string(m.ambient_dim()) + " vs " +
                               std::to_string(n.ambient_dim()) + ")");
  }
}

Subspace orthocomplement(const Subspace& m) {
  const Index n = m.ambient_dim();
  const Index k = m.dim();
  if (k == 0) return Subspace::full(n);
  if (k == n) return Subspace::zero(n);
  const auto s = svd(m.basis(), SvdMode::Full);
  Matrix basis = s.u.rightCols(n - k);
  normalize_column_signs(basis);
  return Subspace(std::move(basis));
}

Subspace intersect(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "intersect");
  const Index amb = m.ambient_dim();
  const Index p = m.dim();
  const Index q = n.dim();
  if (p == 0 || q == 0) return Subspace::zero(amb);

  Matrix stacked(amb, p + q);
  stacked << m.basis(), -n.basis();
  const auto s = svd(stacked, SvdMode::Full);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = rank_count(s.sigma, smax, {amb, p + q}, tol);
  const Index nullity = p + q - r;
  if (nullity == 0) return Subspace::zero(amb);

  // each null vector (a, b) gives B_M a ≈ B_N b; average the two images
  const Matrix coeffs = s.v.rightCols(nullity);
  const Matrix images =
      0.5 * (m.basis() * coeffs.topRows(p) + n.basis() * coeffs.bottomRows(q));
  const auto t = svd(images);
  Matrix basis = t.u.leftCols(std::min<Index>(nullity, t.u.cols()));
  normalize_column_signs(basis);
  return Subspace(std::move(basis));
}

Subspace sum(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "sum");
  Matrix joined(m.ambient_dim(), m.dim() + n.dim());
  joined << m.basis(), n.basis();
  return Subspace::from_columns(joined, tol);
}

Subspace relative_complement(const Subspace& outer, const Subspace& inner,
                             const TolerancePolicy& tol) {
  require_same_ambient(outer, inner, "relative_complement");
  if (outer.dim() == 0) return outer;
  // coordinates of the inner basis with respect to the outer basis
  const Matrix coords = outer.basis().transpose() * inner.basis();
  const Index inner_dim = inner.dim();
  const Index k = outer.dim();
  if (inner_dim == 0) return outer;
  const auto s = svd(coords, SvdMode::Full);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = rank_count(s.sigma, smax, {coords.rows(), coords.cols()}, tol);
  Matrix basis = outer.basis() * s.u.rightCols(k - r);
  normalize_column_signs(basis);
  return Subspace(std::move(basis));
}

bool contains(const Subspace& m, const Vector& x, const TolerancePolicy& tol) {
  if (x.size() != m.ambient_dim()) {
    fail(ErrorKind::Input, "contains: vector length does not match ambient dimension");
  }
  const double norm = x.norm();
  if (norm == 0.0) return true;
  const Vector residual = x - m.basis() * (m.basis().transpose() * x);
  return residual.norm() <= tol.subspace_tol * norm;
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer, const TolerancePolicy& tol) {
  require_same_ambient(inner, outer, "is_subspace_of");
  for (Index j = 0; j < inner.dim(); ++j) {
    if (!contains(outer, inner.basis().col(j), tol)) return false;
  }
  return true;
}

Matrix projector(const Subspace& m) { return m.basis() * m.basis().transpose(); }

double subspace_distance(const Subspace& m, const Subspace& n) {
  require_same_ambient(m, n, "subspace_distance");
  if (m.dim() != n.dim()) return std::numbers::pi / 2;
  if (m.dim() == 0) return 0.0;
  const Matrix off_m = m.basis() - n.basis() * (n.basis().transpose() * m.basis());
  const Matrix off_n = n.basis() - m.basis() * (m.basis().transpose() * n.basis());
  const double sine = std::max(spectral_norm(off_m), spectral_norm(off_n));
  return std::asin(clamp_unit(sine));
}

bool equals(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "equals");
  if (m.dim() != n.dim()) return false;
  return subspace_distance(m, n) <= tol.angle_tol;
}

Subspace image(const Matrix& a, const Subspace& m, const TolerancePolicy& tol) {
  if (a.cols() != m.ambient_dim()) {
    fail(ErrorKind::Input, "image: map width does not match ambient dimension");
  }
  return Subspace::from_columns(a * m.basis(), tol);
}

}  // namespace ccomp
