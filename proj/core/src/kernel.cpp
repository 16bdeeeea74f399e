#include "ccomp/kernel.hpp"

#include "ccomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ccomp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Input: return "input-error";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::Precondition: return "precondition-error";
    case ErrorKind::NoComplement: return "no-complement";
    case ErrorKind::InvalidCertificate: return "invalid-certificate";
    case ErrorKind::InvalidInvolution: return "invalid-involution";
  }
  return "unknown";
}

void TolerancePolicy::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) {
      fail(ErrorKind::Input,
           std::string("tolerance ") + name + " must lie strictly inside (0, 1)");
    }
  };
  check(rank_rel, "rank_rel");
  check(rank_abs, "rank_abs");
  check(angle_tol, "angle_tol");
  check(subspace_tol, "subspace_tol");
}

double TolerancePolicy::rank_threshold(double sigma_max, Index rows, Index cols) const {
  const auto big = static_cast<double>(std::max(rows, cols));
  return std::max(rank_rel * sigma_max * big, rank_abs);
}

TolerancePolicy tolerance_profile(std::string_view name) {
  if (name.empty() || name == "default") return TolerancePolicy{};
  if (name == "strict") return TolerancePolicy{0x1p-46, 1e-14, 1e-11, 1e-11};
  if (name == "loose") return TolerancePolicy{0x1p-30, 1e-9, 1e-7, 1e-7};
  fail(ErrorKind::Input, "unknown tolerance profile '" + std::string(name) + "'");
}

bool all_finite(const Matrix& a) { return a.allFinite(); }

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    fail(ErrorKind::Input, std::string(what) + ": entries must be finite");
  }
}

SvdResult svd(const Matrix& a, SvdMode mode) {
  require_finite(a, "svd");
  const Index rows = a.rows();
  const Index cols = a.cols();
  const Index k = std::min(rows, cols);
  SvdResult out;
  if (k == 0) {
    out.sigma = Vector(0);
    if (mode == SvdMode::Full) {
      out.u = Matrix::Identity(rows, rows);
      out.v = Matrix::Identity(cols, cols);
    } else {
      out.u = Matrix(rows, 0);
      out.v = Matrix(cols, 0);
    }
    return out;
  }
  const unsigned flags = mode == SvdMode::Full ? (Eigen::ComputeFullU | Eigen::ComputeFullV)
                                               : (Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::JacobiSVD<Matrix> solver(a, flags);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::NumericalFailure, "svd: Jacobi iteration did not converge");
  }
  out.u = solver.matrixU();
  out.sigma = solver.singularValues();
  out.v = solver.matrixV();
  return out;
}

double asymmetry(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const auto s = svd(a);
  return s.sigma.size() == 0 ? 0.0 : s.sigma(0);
}

double min_singular_value(const Matrix& a) {
  if (a.size() == 0) return std::numeric_limits<double>::infinity();
  const auto s = svd(a);
  return s.sigma(s.sigma.size() - 1);
}

EigResult sym_eig(const Matrix& a) {
  require_finite(a, "sym_eig");
  if (a.rows() != a.cols()) {
    fail(ErrorKind::Precondition, "sym_eig: matrix must be square");
  }
  EigResult out;
  if (a.rows() == 0) {
    out.lambda = Vector(0);
    out.q = Matrix(0, 0);
    return out;
  }
  const double scale = 1.0 + spectral_norm(a);
  if (asymmetry(a) > 1e-10 * scale) {
    fail(ErrorKind::Precondition, "sym_eig: matrix is not symmetric within tolerance");
  }
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::NumericalFailure, "sym_eig: eigensolver did not converge");
  }
  out.lambda = solver.eigenvalues();
  out.q = solver.eigenvectors();
  return out;
}

Index rank_count(const Vector& sigma, double sigma_max, std::pair<Index, Index> dims,
                 const TolerancePolicy& tol) {
  const double threshold = tol.rank_threshold(sigma_max, dims.first, dims.second);
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++r;
  }
  return r;
}

void normalize_column_signs(Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    Index pivot = 0;
    double best = -1.0;
    for (Index i = 0; i < a.rows(); ++i) {
      // first entry within a relative hair of the column maximum wins, so
      // exact ties such as (1, 1)/sqrt(2) resolve to the leading index
      const double mag = std::abs(a(i, j));
      if (mag > best * (1.0 + 1e-12) + 1e-300) {
        best = mag;
        pivot = i;
      }
    }
    if (a.rows() > 0 && a(pivot, j) < 0.0) a.col(j) = -a.col(j);
  }
}

Matrix orthonormalize(const Matrix& a, const TolerancePolicy& tol) {
  require_finite(a, "orthonormalize");
  if (a.cols() == 0 || a.rows() == 0) return Matrix(a.rows(), 0);
  const auto s = svd(a);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = rank_count(s.sigma, smax, {a.rows(), a.cols()}, tol);
  Matrix basis = s.u.leftCols(r);
  normalize_column_signs(basis);
  return basis;
}

Matrix ordered_orthonormal_factor(const Matrix& a) {
  require_finite(a, "ordered_orthonormal_factor");
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < a.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Matrix null_space(const Matrix& a, const TolerancePolicy& tol) {
  require_finite(a, "null_space");
  const Index cols = a.cols();
  if (cols == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(cols, cols);
  const auto s = svd(a, SvdMode::Full);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = rank_count(s.sigma, smax, {a.rows(), a.cols()}, tol);
  Matrix basis = s.v.rightCols(cols - r);
  normalize_column_signs(basis);
  return basis;
}

}  // namespace ccomp
