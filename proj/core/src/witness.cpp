#include "ccomp/witness.hpp"

#include "ccomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ccomp {

namespace {

// Basis of Y = M + N; the identity when Y is the whole space so that
// full-rank pairs are handled in the caller's own coordinates.
Matrix sum_basis(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  const Subspace y = sum(m, n, tol);
  if (y.dim() == y.ambient_dim()) return Matrix::Identity(y.dim(), y.dim());
  return y.basis();
}

// Coordinates of a subspace of span(by) with respect to the orthonormal basis by.
Subspace to_coords(const Subspace& x, const Matrix& by, const TolerancePolicy& tol) {
  return Subspace::from_columns(by.transpose() * x.basis(), tol);
}

// K₀ (inside Y, given in Y coordinates) lifted back and completed by Y⊥.
Subspace lift_with_orthogonal_rest(const Matrix& by, const Matrix& k_coords,
                                   const TolerancePolicy& tol) {
  const Index n = by.rows();
  const Matrix rest = orthocomplement(Subspace(by)).basis();
  Matrix joined(n, k_coords.cols() + rest.cols());
  joined << by * k_coords, rest;
  return Subspace::from_columns(joined, tol);
}

// Oblique projection onto span(b_range) along span(b_kernel); the block
// [b_range | b_kernel] must be square and nonsingular.
Matrix oblique_projection(const Matrix& b_range, const Matrix& b_kernel) {
  const Index n = b_range.rows();
  Matrix block(n, b_range.cols() + b_kernel.cols());
  block << b_range, b_kernel;
  if (n == 0) return Matrix(0, 0);
  const Matrix coeffs = block.colPivHouseholderQr().solve(Matrix::Identity(n, n));
  return b_range * coeffs.topRows(b_range.cols());
}

double condition_number(const Matrix& a) {
  if (a.size() == 0) return 1.0;
  const auto s = svd(a);
  const double smin = s.sigma(s.sigma.size() - 1);
  return smin > 0.0 ? s.sigma(0) / smin : std::numeric_limits<double>::infinity();
}

struct SymmetryParts {
  Matrix s;
  Matrix minus_axis;  // orthonormal basis of ker(S + I)
};

SymmetryParts build_exchanging_symmetry(const Subspace& m, const Subspace& n,
                                        const TolerancePolicy& tol) {
  require_same_ambient(m, n, "exchanging_symmetry");
  const auto report = classify(m, n, tol);
  if (!report.equivalently_positioned) {
    fail(ErrorKind::Precondition, "exchanging_symmetry: pair is not equivalently positioned");
  }
  const Index amb = m.ambient_dim();
  const Index p = m.dim();
  SymmetryParts out{Matrix::Identity(amb, amb), Matrix(amb, 0)};
  if (p == 0) return out;

  // principal vectors u_i ∈ M, v_i ∈ N with u_iᵀv_j = δ_ij cos θ_i
  const auto s = svd(m.basis().transpose() * n.basis(), SvdMode::Full);
  const Matrix u = m.basis() * s.u;
  const Matrix v = n.basis() * s.v;
  const Index skip = report.decomposition.dim_MN;

  // identity on M ∩ N; on every other principal plane (generic or a
  // M∩N⊥ / M⊥∩N pair at π/2) the reflection across u_i + v_i
  Matrix k(amb, p - skip);
  for (Index i = skip; i < p; ++i) {
    const Vector diff = u.col(i) - v.col(i);
    k.col(i - skip) = diff / diff.norm();
  }
  out.minus_axis = ordered_orthonormal_factor(k);
  out.s -= 2.0 * out.minus_axis * out.minus_axis.transpose();
  return out;
}

GraphForm finish_form(GraphForm form) {
  form.cond_U = condition_number(form.U);
  return form;
}

}  // namespace

Matrix exchanging_symmetry(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  return build_exchanging_symmetry(m, n, tol).s;
}

ComplementCertificate verify_common_complement(const Subspace& m, const Subspace& n,
                                               const Subspace& k, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "verify_common_complement");
  require_same_ambient(m, k, "verify_common_complement");
  tol.validate();
  const Index amb = m.ambient_dim();
  if (k.dim() != amb - m.dim() || k.dim() != amb - n.dim()) {
    std::ostringstream why;
    why << "verify_common_complement: dimension predicate failed (dim K = " << k.dim()
        << ", n - dim M = " << amb - m.dim() << ", n - dim N = " << amb - n.dim() << ")";
    fail(ErrorKind::InvalidCertificate, why.str());
  }

  auto block_sv = [&](const Subspace& x, const char* name) {
    Matrix block(amb, x.dim() + k.dim());
    block << x.basis(), k.basis();
    const double smin = amb == 0 ? 1.0 : min_singular_value(block);
    const double threshold = tol.rank_threshold(std::sqrt(2.0), amb, amb);
    if (!(smin > threshold)) {
      fail(ErrorKind::InvalidCertificate, std::string("verify_common_complement: ") + name +
                                              " ∩ K is not {0} (σ_min of [B_" + name +
                                              " | B_K] below threshold)");
    }
    return smin;
  };

  ComplementCertificate cert;
  cert.K = k;
  cert.min_basis_sv_M = block_sv(m, "M");
  cert.min_basis_sv_N = block_sv(n, "N");
  cert.P_M_along_K = oblique_projection(m.basis(), k.basis());
  cert.P_N_along_K = oblique_projection(n.basis(), k.basis());

  const Index q = n.dim();
  if (q > 0) {
    const Matrix round_trip =
        n.basis().transpose() * cert.P_N_along_K * cert.P_M_along_K * n.basis();
    cert.inverse_residual = spectral_norm(round_trip - Matrix::Identity(q, q));
  }
  const double scale =
      std::max(1.0, spectral_norm(cert.P_M_along_K) * spectral_norm(cert.P_N_along_K));
  if (!(cert.inverse_residual <= kCertificateTol * scale)) {
    std::ostringstream why;
    why << "verify_common_complement: inverse identity failed (residual "
        << cert.inverse_residual << ")";
    fail(ErrorKind::InvalidCertificate, why.str());
  }
  return cert;
}

ComplementCertificate common_complement(const Subspace& m, const Subspace& n,
                                        const TolerancePolicy& tol) {
  require_same_ambient(m, n, "common_complement");
  if (m.dim() != n.dim()) {
    fail(ErrorKind::NoComplement, "common_complement: dim M = " + std::to_string(m.dim()) +
                                      " differs from dim N = " + std::to_string(n.dim()));
  }
  const auto parts = build_exchanging_symmetry(m, n, tol);
  // the −1 axis already lies in M + N; append (M + N)⊥
  const Subspace y = sum(m, n, tol);
  const Matrix rest = orthocomplement(y).basis();
  Matrix joined(m.ambient_dim(), parts.minus_axis.cols() + rest.cols());
  joined << parts.minus_axis, rest;
  const Subspace k = Subspace::from_columns(joined, tol);
  return verify_common_complement(m, n, k, tol);
}

GraphForm graph_pair_form(const Subspace& m, const Subspace& n, const Subspace& k,
                          const TolerancePolicy& tol) {
  const auto cert = verify_common_complement(m, n, k, tol);
  const Index amb = m.ambient_dim();
  const Matrix q1 = orthocomplement(k).basis();
  const Matrix& q2 = k.basis();
  const Matrix id = Matrix::Identity(amb, amb);

  GraphForm form;
  form.dim_X1 = q1.cols();
  form.dim_X2 = q2.cols();
  // T x = G₁⁻¹x − x with G₁⁻¹ = P_{M∥K} on K⊥
  form.T = q2.transpose() * (cert.P_M_along_K - id) * q1;
  form.S = q2.transpose() * (cert.P_N_along_K - id) * q1;
  form.U.resize(amb, amb);
  form.U << q1.transpose(), q2.transpose();
  return finish_form(std::move(form));
}

GraphForm zero_graph_form(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  const auto cert = common_complement(m, n, tol);
  return zero_graph_form(m, n, cert.K, tol);
}

GraphForm zero_graph_form(const Subspace& m, const Subspace& n, const Subspace& k,
                          const TolerancePolicy& tol) {
  if (m.dim() != n.dim()) {
    fail(ErrorKind::NoComplement, "zero_graph_form: dimensions of M and N differ");
  }
  const auto cert = verify_common_complement(m, n, k, tol);
  const Index amb = m.ambient_dim();
  const Matrix id = Matrix::Identity(amb, amb);
  const Matrix& p = cert.P_M_along_K;

  GraphForm form;
  form.dim_X1 = m.dim();
  form.dim_X2 = k.dim();
  form.T = Matrix::Zero(form.dim_X2, form.dim_X1);
  form.S = k.basis().transpose() * (cert.P_N_along_K - id) * m.basis();
  form.U.resize(amb, amb);
  form.U << m.basis().transpose() * p, k.basis().transpose() * (id - p);
  return finish_form(std::move(form));
}

namespace {

GraphForm shear_to_antisymmetric(GraphForm zero) {
  const Index d1 = zero.dim_X1;
  const Index d2 = zero.dim_X2;
  Matrix shear = Matrix::Identity(d1 + d2, d1 + d2);
  shear.bottomLeftCorner(d2, d1) = -0.5 * zero.S;
  GraphForm form;
  form.dim_X1 = d1;
  form.dim_X2 = d2;
  form.S = 0.5 * zero.S;
  form.T = -form.S;
  form.U = shear * zero.U;
  return finish_form(std::move(form));
}

}  // namespace

GraphForm antisymmetric_graph_form(const Subspace& m, const Subspace& n,
                                   const TolerancePolicy& tol) {
  return shear_to_antisymmetric(zero_graph_form(m, n, tol));
}

GraphForm antisymmetric_graph_form(const Subspace& m, const Subspace& n, const Subspace& k,
                                   const TolerancePolicy& tol) {
  return shear_to_antisymmetric(zero_graph_form(m, n, k, tol));
}

GraphResiduals graph_form_residuals(const Subspace& m, const Subspace& n, const GraphForm& form,
                                    const TolerancePolicy& tol) {
  const Index amb = m.ambient_dim();
  if (form.U.rows() != amb || form.U.cols() != amb || form.dim_X1 + form.dim_X2 != amb) {
    fail(ErrorKind::Input, "graph_form_residuals: form does not match the ambient dimension");
  }
  auto graph = [&](const Matrix& op) {
    Matrix g(amb, form.dim_X1);
    g << Matrix::Identity(form.dim_X1, form.dim_X1), op;
    return Subspace::from_columns(g, tol);
  };
  GraphResiduals r;
  r.distance_M = subspace_distance(image(form.U, m, tol), graph(form.T));
  r.distance_N = subspace_distance(image(form.U, n, tol), graph(form.S));
  return r;
}

InvolutionCertificate inspect_involution(const Subspace& m, const Subspace& n, const Matrix& s,
                                         const TolerancePolicy& tol) {
  require_same_ambient(m, n, "inspect_involution");
  const Index amb = m.ambient_dim();
  if (s.rows() != amb || s.cols() != amb) {
    fail(ErrorKind::Input, "inspect_involution: S must be a square matrix of the ambient size");
  }
  require_finite(s, "inspect_involution");
  const Matrix id = Matrix::Identity(amb, amb);

  InvolutionCertificate cert;
  cert.S = s;
  cert.involution_residual = spectral_norm(s * s - id);
  cert.exchange_residual = subspace_distance(image(s, m, tol), n);
  // empty M: vacuous bound, reported as the value the identity attains
  cert.lower_bound_attained = m.dim() == 0 ? 2.0 : min_singular_value((id + s) * m.basis());
  cert.K_plus = Subspace(null_space(s - id, tol));
  cert.K_minus = Subspace(null_space(s + id, tol));
  if (cert.K_plus.dim() + cert.K_minus.dim() == amb) {
    const Matrix p = oblique_projection(cert.K_plus.basis(), cert.K_minus.basis());
    cert.projection_residual = spectral_norm(p - 0.5 * (id + s));
  } else {
    cert.projection_residual = std::numeric_limits<double>::infinity();
  }
  return cert;
}

InvolutionCertificate involution_for_pair(const Subspace& m, const Subspace& n,
                                          const TolerancePolicy& tol) {
  return involution_for_pair(m, n, common_complement(m, n, tol).K, tol);
}

InvolutionCertificate involution_for_pair(const Subspace& m, const Subspace& n,
                                          const Subspace& k, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "involution_for_pair");
  require_same_ambient(m, k, "involution_for_pair");
  if (m.dim() != n.dim()) {
    fail(ErrorKind::NoComplement, "involution_for_pair: dimensions of M and N differ");
  }
  const Index amb = m.ambient_dim();
  const Matrix by = sum_basis(m, n, tol);
  const Index ydim = by.cols();
  if (ydim == 0) {
    auto cert = inspect_involution(m, n, Matrix::Identity(amb, amb), tol);
    cert.C = 2.0;
    return cert;
  }

  // K ∩ Y complements M and N inside Y
  const Subspace y(by);
  const Subspace k_y = to_coords(intersect(k, y, tol), by, tol);
  const Subspace m_y = to_coords(m, by, tol);
  const Subspace n_y = to_coords(n, by, tol);
  const GraphForm form = antisymmetric_graph_form(m_y, n_y, k_y, tol);

  Matrix flip = Matrix::Identity(ydim, ydim);
  flip.bottomRightCorner(form.dim_X2, form.dim_X2) *= -1.0;
  const Matrix s_y = form.U.partialPivLu().solve(flip * form.U);
  const Matrix s = by * s_y * by.transpose() + (Matrix::Identity(amb, amb) - by * by.transpose());

  auto cert = inspect_involution(m, n, s, tol);
  cert.C = 2.0 / (form.cond_U * (1.0 + spectral_norm(form.S)));
  return cert;
}

ComplementCertificate complement_from_involution(const Subspace& m, const Subspace& n,
                                                 const Matrix& s, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "complement_from_involution");
  const Index amb = m.ambient_dim();
  if (s.rows() != amb || s.cols() != amb) {
    fail(ErrorKind::Input, "complement_from_involution: S must be square of the ambient size");
  }
  require_finite(s, "complement_from_involution");
  const Matrix id = Matrix::Identity(amb, amb);
  const double norm_s = spectral_norm(s);
  const double slack = kCertificateTol * std::max(1.0, norm_s * norm_s);

  const double inv_res = spectral_norm(s * s - id);
  if (!(inv_res <= slack)) {
    fail(ErrorKind::InvalidInvolution,
         "complement_from_involution: S^2 != I (residual " + std::to_string(inv_res) + ")");
  }
  if (m.dim() != n.dim() || subspace_distance(image(s, m, tol), n) > slack) {
    fail(ErrorKind::InvalidInvolution, "complement_from_involution: S(M) != N");
  }
  if (m.dim() > 0) {
    const double bound = min_singular_value((id + s) * m.basis());
    if (!(bound > tol.rank_threshold(1.0 + norm_s, amb, m.dim()))) {
      fail(ErrorKind::InvalidInvolution,
           "complement_from_involution: I + S is not bounded below on M");
    }
  }

  const Matrix by = sum_basis(m, n, tol);
  const Index ydim = by.cols();
  Matrix k_coords(ydim, 0);
  if (ydim > 0) {
    const Matrix leak = s * by - by * (by.transpose() * s * by);
    if (spectral_norm(leak) > slack) {
      fail(ErrorKind::InvalidInvolution, "complement_from_involution: S does not preserve M + N");
    }
    const Matrix s_y = by.transpose() * s * by;
    k_coords = null_space(s_y + Matrix::Identity(ydim, ydim), tol);
  }
  const Subspace k = lift_with_orthogonal_rest(by, k_coords, tol);
  return verify_common_complement(m, n, k, tol);
}

ComplementCertificate projection_from_isomorphism(const Subspace& m, const Subspace& n,
                                                  const Matrix& u_map, double c,
                                                  const TolerancePolicy& tol) {
  require_same_ambient(m, n, "projection_from_isomorphism");
  const Index amb = m.ambient_dim();
  if (u_map.rows() != amb || u_map.cols() != amb) {
    fail(ErrorKind::Input, "projection_from_isomorphism: U must be square of the ambient size");
  }
  require_finite(u_map, "projection_from_isomorphism");
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorKind::Input, "projection_from_isomorphism: C must be positive and finite");
  }
  const double norm_u = std::max(1.0, spectral_norm(u_map));

  const Subspace um = image(u_map, m, tol);
  if (m.dim() != n.dim() || um.dim() != m.dim() ||
      subspace_distance(um, n) > kCertificateTol * norm_u) {
    fail(ErrorKind::Precondition, "projection_from_isomorphism: U does not map M onto N");
  }
  const Subspace l = intersect(m, n, tol);
  if (l.dim() > 0) {
    const double drift = (u_map * l.basis() - l.basis()).cwiseAbs().maxCoeff();
    if (drift > kCertificateTol * norm_u) {
      fail(ErrorKind::Precondition, "projection_from_isomorphism: U does not fix M ∩ N");
    }
  }

  // P(x + y) = Ux + y, realized as F G⁺ with G = [B_M | B_N], F = [U B_M | B_N]
  const Index p = m.dim();
  const Index q = n.dim();
  Matrix g(amb, p + q);
  g << m.basis(), n.basis();
  Matrix f(amb, p + q);
  f << u_map * m.basis(), n.basis();
  Matrix by(amb, 0);
  Matrix proj = Matrix::Zero(amb, amb);
  if (p + q > 0) {
    const auto s = svd(g);
    const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
    const Index r = rank_count(s.sigma, smax, {amb, p + q}, tol);
    by = s.u.leftCols(r);
    const Matrix pinv =
        s.v.leftCols(r) * s.sigma.head(r).cwiseInverse().asDiagonal() * by.transpose();
    proj = f * pinv;
  }
  const double norm_p = spectral_norm(proj);
  if (norm_p > c * (1.0 + kCertificateTol)) {
    std::ostringstream why;
    why << "projection_from_isomorphism: bound ‖Ux + y‖ ≤ C‖x + y‖ violated (needs C ≥ "
        << norm_p << ", got " << c << ")";
    fail(ErrorKind::Precondition, why.str());
  }

  Matrix k_coords(by.cols(), 0);
  if (by.cols() > 0) k_coords = null_space(by.transpose() * proj * by, tol);
  const Subspace k = lift_with_orthogonal_rest(by, k_coords, tol);
  return verify_common_complement(m, n, k, tol);
}

ContractionForm contraction_graph_form(const Subspace& m, const Subspace& n,
                                       const TolerancePolicy& tol) {
  require_same_ambient(m, n, "contraction_graph_form");
  const auto report = classify(m, n, tol);
  if (!report.equivalently_positioned) {
    fail(ErrorKind::Precondition, "contraction_graph_form: pair is not equivalently positioned");
  }
  const Index amb = m.ambient_dim();
  const Index p = m.dim();
  const Index common = report.decomposition.dim_MN;

  Matrix bisectors(amb, p - common);
  Matrix normals(amb, p - common);
  Matrix shared(amb, common);
  if (p > 0) {
    const auto s = svd(m.basis().transpose() * n.basis(), SvdMode::Full);
    const Matrix u = m.basis() * s.u;
    const Matrix v = n.basis() * s.v;
    for (Index i = 0; i < common; ++i) shared.col(i) = 0.5 * (u.col(i) + v.col(i));
    for (Index i = common; i < p; ++i) {
      const Vector plus = u.col(i) + v.col(i);
      const Vector minus = v.col(i) - u.col(i);
      bisectors.col(i - common) = plus / plus.norm();
      normals.col(i - common) = minus / minus.norm();
    }
  }
  const Matrix rest = orthocomplement(sum(m, n, tol)).basis();

  // X1 = bisectors ⊕ (M ∩ N), X2 = normals ⊕ (M + N)⊥
  Matrix frame(amb, amb);
  frame << bisectors, shared, normals, rest;
  const Matrix q = ordered_orthonormal_factor(frame);

  ContractionForm out;
  GraphForm& form = out.form;
  form.dim_X1 = p;
  form.dim_X2 = amb - p;
  form.U = q.transpose();

  auto graph_operator = [&](const Subspace& x) -> Matrix {
    if (p == 0) return Matrix(amb, 0);
    const Matrix coords = form.U * x.basis();
    const Matrix top = coords.topRows(p);
    return top.transpose().partialPivLu().solve(coords.bottomRows(amb - p).transpose()).transpose();
  };
  const Matrix t_m = graph_operator(m);
  const Matrix t_n = graph_operator(n);
  form.S = 0.5 * (t_n - t_m);
  form.T = -form.S;
  form.cond_U = condition_number(form.U);

  if (p == 0) {
    out.injectivity_margin = 1.0;
  } else {
    out.injectivity_margin =
        min_singular_value(Matrix::Identity(p, p) - form.S.transpose() * form.S);
  }
  out.position_p_prime = report.position_p_prime;
  return out;
}

OrthocomplementCheck orthocomplement_common_complement(const Subspace& m, const Subspace& n,
                                                       const TolerancePolicy& tol) {
  require_same_ambient(m, n, "orthocomplement_common_complement");
  const auto report = classify(m, n, tol);
  OrthocomplementCheck out;
  out.holds = report.dims_equal && report.decomposition.dim_Mperp_N == 0;
  if (!report.dims_equal) return out;

  const auto contraction = contraction_graph_form(m, n, tol);
  const Matrix& t = contraction.form.S;
  const Index rows = t.rows();
  out.surjectivity_margin =
      rows == 0 ? 1.0 : min_singular_value(Matrix::Identity(rows, rows) - t * t.transpose());
  out.contraction = t;
  if (out.holds) {
    out.form = graph_pair_form(m, n, orthocomplement(m), tol);
    if (!(out.surjectivity_margin > tol.rank_threshold(1.0, rows, rows))) {
      fail(ErrorKind::NumericalFailure,
           "orthocomplement_common_complement: I - TTᵀ not onto although M⊥ complements N");
    }
  }
  return out;
}

ReducedPair reduce_pair(const Subspace& m, const Subspace& n, const TolerancePolicy& tol) {
  require_same_ambient(m, n, "reduce_pair");
  Subspace l = intersect(m, n, tol);
  const Matrix strip = Matrix::Identity(m.ambient_dim(), m.ambient_dim()) - projector(l);
  return ReducedPair{image(strip, m, tol), image(strip, n, tol), std::move(l)};
}

ClosedCompanion closed_companion(const Subspace& m, const Subspace& n, const Subspace& k,
                                 const Subspace& m1, const TolerancePolicy& tol) {
  require_same_ambient(m, m1, "closed_companion");
  if (!is_subspace_of(m1, m, tol)) {
    fail(ErrorKind::Precondition, "closed_companion: M1 is not a subspace of M");
  }
  const auto cert = verify_common_complement(m, n, k, tol);

  const Subspace m2 = relative_complement(m, m1, tol);
  // U = P_{M∥K}|_N, so U⁻¹ = P_{N∥K}|_M
  Subspace n1 = image(cert.P_N_along_K, m2, tol);
  if (n1.dim() != m2.dim()) {
    fail(ErrorKind::NumericalFailure, "closed_companion: U⁻¹ lost rank on M ⊖ M1");
  }

  ClosedCompanion out{std::move(n1), 0.0, 1.0, 0.0, 1.0};
  const Matrix by = sum(m, n, tol).basis();
  out.C = std::max(1.0, spectral_norm(cert.P_M_along_K * by));
  out.inverse_norm = spectral_norm(cert.P_N_along_K * m.basis());
  const double inv_factor = out.inverse_norm > 0.0 ? std::min(1.0 / out.inverse_norm, 1.0) : 1.0;
  out.C_prime = inv_factor / (std::sqrt(2.0) * out.C);

  if (out.N1.dim() > 0 && m1.dim() > 0) {
    Matrix block(m.ambient_dim(), out.N1.dim() + m1.dim());
    block << out.N1.basis(), m1.basis();
    // ‖x + y‖ ≥ σ_min ‖(a, b)‖ ≥ σ_min (‖x‖ + ‖y‖)/√2
    out.attained = min_singular_value(block) / std::sqrt(2.0);
  }
  if (out.attained < out.C_prime * (1.0 - 1e-12)) {
    std::ostringstream why;
    why << "closed_companion: inequality check failed (attained " << out.attained
        << " < C' " << out.C_prime << ")";
    fail(ErrorKind::NumericalFailure, why.str());
  }
  return out;
}

}  // namespace ccomp
