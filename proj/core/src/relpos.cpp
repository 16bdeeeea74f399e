#include "ccomp/relpos.hpp"

#include "ccomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ccomp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_epsilon(double epsilon, const char* op) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    fail(ErrorKind::Input, std::string(op) + ": epsilon must lie strictly inside (0, 1)");
  }
}

// Cosines of M against N, descending, padded with zeros to length dim M.
std::vector<double> padded_cosines(const Subspace& m, const Subspace& n) {
  std::vector<double> cos(static_cast<std::size_t>(m.dim()), 0.0);
  if (m.dim() == 0 || n.dim() == 0) return cos;
  const auto s = svd(m.basis().transpose() * n.basis());
  for (Index i = 0; i < s.sigma.size(); ++i) {
    cos[static_cast<std::size_t>(i)] = clamp_unit(s.sigma(i));
  }
  return cos;
}

}  // namespace

std::vector<double> principal_sines_padded(const Subspace& m, const Subspace& n) {
  require_same_ambient(m, n, "principal_sines");
  const auto p = static_cast<std::size_t>(m.dim());
  std::vector<double> sines(p, 1.0);
  if (p == 0 || n.dim() == 0) return sines;
  const Matrix residual = m.basis() - n.basis() * (n.basis().transpose() * m.basis());
  const auto s = svd(residual);
  // singular values come out descending; sines of ascending angles are ascending
  for (std::size_t i = 0; i < p; ++i) {
    sines[i] = clamp_unit(s.sigma(static_cast<Index>(p - 1 - i)));
  }
  return sines;
}

std::vector<double> principal_angles_padded(const Subspace& m, const Subspace& n) {
  require_same_ambient(m, n, "principal_angles");
  const auto cos = padded_cosines(m, n);
  const auto sin = principal_sines_padded(m, n);
  std::vector<double> angles(cos.size());
  for (std::size_t i = 0; i < cos.size(); ++i) {
    // cosines resolve large angles well, sines resolve small ones; switch at 45°
    angles[i] = cos[i] * cos[i] >= 0.5 ? std::asin(sin[i]) : std::acos(cos[i]);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<double> principal_angles(const Subspace& m, const Subspace& n) {
  auto angles = principal_angles_padded(m, n);
  angles.resize(static_cast<std::size_t>(std::min(m.dim(), n.dim())));
  return angles;
}

PairDecomposition pair_decomposition(const Subspace& m, const Subspace& n,
                                     const TolerancePolicy& tol) {
  require_same_ambient(m, n, "pair_decomposition");
  tol.validate();
  const Subspace m_perp = orthocomplement(m);
  const Subspace n_perp = orthocomplement(n);

  PairDecomposition d;
  d.dim_m = m.dim();
  d.dim_n = n.dim();
  d.dim_MN = intersect(m, n, tol).dim();
  d.dim_M_Nperp = intersect(m, n_perp, tol).dim();
  d.dim_Mperp_N = intersect(m_perp, n, tol).dim();
  d.dim_Mperp_Nperp = intersect(m_perp, n_perp, tol).dim();
  d.generic_mult = d.dim_m - d.dim_MN - d.dim_M_Nperp;
  d.angles = principal_angles_padded(m, n);

  if (m.dim() > 0) {
    const Matrix g = n.basis().transpose() * m.basis();  // G in orthonormal coordinates
    const auto eig = sym_eig(g.transpose() * g);
    d.gram_spectrum.resize(static_cast<std::size_t>(m.dim()));
    for (Index i = 0; i < m.dim(); ++i) {
      d.gram_spectrum[static_cast<std::size_t>(i)] =
          clamp_unit(eig.lambda(m.dim() - 1 - i));
    }
  }

  std::ostringstream why;
  if (d.generic_mult < 0) why << "corner dims exceed dim M; ";
  if (d.dim_MN + d.dim_Mperp_N + d.generic_mult != d.dim_n) {
    why << "corner dims inconsistent with dim N; ";
  }
  if (d.dim_m + d.dim_n - d.dim_MN + d.dim_Mperp_Nperp != m.ambient_dim()) {
    why << "dim(M+N) + dim(M⊥∩N⊥) differs from the ambient dimension; ";
  }
  Index zeros = 0;
  Index rights = 0;
  for (double a : d.angles) {
    if (a <= tol.angle_tol) ++zeros;
    if (a >= kHalfPi - tol.angle_tol) ++rights;
  }
  if (zeros != d.dim_MN) why << "zero-angle count " << zeros << " != dim M∩N " << d.dim_MN << "; ";
  if (rights != d.dim_M_Nperp) {
    why << "right-angle count " << rights << " != dim M∩N⊥ " << d.dim_M_Nperp << "; ";
  }
  if (!why.str().empty()) fail(ErrorKind::NumericalFailure, "pair_decomposition: " + why.str());
  return d;
}

PositionReport classify(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  PositionReport r;
  r.decomposition = pair_decomposition(m, n, tol);
  const auto& d = r.decomposition;
  r.generic_position =
      d.dim_MN == 0 && d.dim_M_Nperp == 0 && d.dim_Mperp_N == 0 && d.dim_Mperp_Nperp == 0;
  r.generalized_generic =
      d.dim_MN == 0 && d.dim_Mperp_Nperp == 0 && d.dim_M_Nperp == d.dim_Mperp_N;
  r.position_p_prime = d.dim_M_Nperp == 0 && d.dim_Mperp_N == 0;
  r.equivalently_positioned = d.dim_M_Nperp == d.dim_Mperp_N;
  r.dims_equal = d.dim_m == d.dim_n;
  r.reduced_dims_equal = (d.dim_m - d.dim_MN) == (d.dim_n - d.dim_MN);
  return r;
}

namespace {

SpectralCountResult spectral_count_from(const PairDecomposition& d, double epsilon,
                                        const TolerancePolicy& tol) {
  SpectralCountResult r;
  const double lower = tol.rank_abs;
  const double upper = 1.0 - epsilon - tol.rank_abs;
  for (double lambda : d.gram_spectrum) {
    if (lambda > lower && lambda < upper) ++r.spectral_count;
  }
  r.left_count = d.dim_M_Nperp + r.spectral_count;
  r.right_count = d.dim_Mperp_N + r.spectral_count;
  r.holds = r.left_count == r.right_count;
  return r;
}

Index count_at_most(const std::vector<double>& sines, double epsilon) {
  return static_cast<Index>(
      std::count_if(sines.begin(), sines.end(), [&](double s) { return s <= epsilon; }));
}

double margin_from_angles(const std::vector<double>& angles, const TolerancePolicy& tol) {
  double margin = 1.0;
  for (double a : angles) {
    if (a > tol.angle_tol) margin = std::min(margin, std::sin(a));
  }
  return margin;
}

}  // namespace

SpectralCountResult lauzon_treil_check(const Subspace& m, const Subspace& n, double epsilon,
                                       const TolerancePolicy& tol) {
  require_epsilon(epsilon, "lauzon_treil_check");
  return spectral_count_from(pair_decomposition(m, n, tol), epsilon, tol);
}

bool lauzon_treil_for_small_epsilon(const Subspace& m, const Subspace& n,
                                    const TolerancePolicy& tol, int levels) {
  const auto d = pair_decomposition(m, n, tol);
  double epsilon = std::min(0.5, 0.5 * margin_from_angles(d.angles, tol));
  for (int k = 0; k <= levels; ++k, epsilon *= 0.5) {
    if (!spectral_count_from(d, epsilon, tol).holds) return false;
  }
  return true;
}

ConeReport cone_report(const Subspace& m, const Subspace& n, double epsilon,
                       const TolerancePolicy& tol) {
  require_epsilon(epsilon, "cone_report");
  require_same_ambient(m, n, "cone_report");
  tol.validate();
  ConeReport r;
  r.epsilon = epsilon;
  r.max_subspace_dim_M = count_at_most(principal_sines_padded(m, n), epsilon);
  r.max_subspace_dim_N = count_at_most(principal_sines_padded(n, m), epsilon);
  r.ulc_M = m.dim() - r.max_subspace_dim_M;
  r.ulc_N = n.dim() - r.max_subspace_dim_N;
  return r;
}

bool cone_codimensions_equal_for_small_epsilon(const Subspace& m, const Subspace& n,
                                               const TolerancePolicy& tol, int levels) {
  double epsilon = default_epsilon(m, n, tol);
  for (int k = 0; k <= levels; ++k, epsilon *= 0.5) {
    const auto c = cone_report(m, n, epsilon, tol);
    if (c.ulc_M != c.ulc_N) return false;
  }
  return true;
}

double sum_closedness_margin(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "sum_closedness_margin");
  return margin_from_angles(principal_angles_padded(m, n), tol);
}

double default_epsilon(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  return std::min(0.5, 0.5 * sum_closedness_margin(m, n, tol));
}

ComplementDecision has_common_complement(const Subspace& m, const Subspace& n,
                                         const TolerancePolicy& tol) {
  return has_common_complement(m, n, default_epsilon(m, n, tol), tol);
}

ComplementDecision has_common_complement(const Subspace& m, const Subspace& n, double epsilon,
                                         const TolerancePolicy& tol) {
  require_epsilon(epsilon, "has_common_complement");
  const auto report = classify(m, n, tol);
  const auto spectral = spectral_count_from(report.decomposition, epsilon, tol);
  const auto cone = cone_report(m, n, epsilon, tol);

  ComplementDecision out;
  out.decision = m.dim() == n.dim();
  auto& c = out.cross_checks;
  c.epsilon = epsilon;
  c.dims_equal = out.decision;
  c.equivalently_positioned = report.equivalently_positioned;
  c.spectral_count = spectral.holds;
  c.cone_codimension = cone.ulc_M == cone.ulc_N;
  c.reduced_dims_equal = report.reduced_dims_equal;

  if (c.equivalently_positioned != out.decision || c.spectral_count != out.decision ||
      c.cone_codimension != out.decision || c.reduced_dims_equal != out.decision) {
    std::ostringstream why;
    why << "has_common_complement: cross-checks disagree (dims_equal=" << c.dims_equal
        << ", equivalently_positioned=" << c.equivalently_positioned
        << ", spectral_count=" << c.spectral_count << " [left " << spectral.left_count
        << ", right " << spectral.right_count << "]"
        << ", cone_codimension=" << c.cone_codimension << " [ulc_M " << cone.ulc_M
        << ", ulc_N " << cone.ulc_N << "]"
        << ", reduced_dims_equal=" << c.reduced_dims_equal << ", epsilon=" << epsilon << ")";
    fail(ErrorKind::NumericalFailure, why.str());
  }
  return out;
}

}  // namespace ccomp
