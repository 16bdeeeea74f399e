#pragma once

// Constructions that exhibit common complements, exchanging symmetries,
// involutions, oblique projections and graph-pair forms. Every construction
// returns data that can be re-checked independently; nothing here is unique
// and certificates are verified, never compared.

#include "ccomp/relpos.hpp"

#include <optional>

namespace ccomp {

/// Residual bound used by every certificate predicate.
inline constexpr double kCertificateTol = 1e-9;

struct ComplementCertificate {
  Subspace K = Subspace::zero(0);
  Matrix P_M_along_K;             // oblique projection onto M along K
  Matrix P_N_along_K;
  double min_basis_sv_M = 0.0;    // σ_min [B_M | B_K]
  double min_basis_sv_N = 0.0;    // σ_min [B_N | B_K]
  double inverse_residual = 0.0;  // ‖P_{N∥K}|_M ∘ P_{M∥K}|_N − id_N‖₂
};

/// Pair {M, N} carried by U onto {Gr(T), Gr(S)} inside X1 ⊕ X2, in
/// orthonormal coordinates of X1 (first dim_X1 rows of U) and X2.
struct GraphForm {
  Index dim_X1 = 0;
  Index dim_X2 = 0;
  Matrix T;  // dim_X2 x dim_X1, graph operator of U(M)
  Matrix S;  // dim_X2 x dim_X1, graph operator of U(N)
  Matrix U;  // n x n, invertible
  double cond_U = 1.0;
};

struct GraphResiduals {
  double distance_M = 0.0;  // largest principal angle between U(M) and Gr(T)
  double distance_N = 0.0;  // same for U(N) and Gr(S)
};

struct ContractionForm {
  GraphForm form;                  // S = -T, ‖T‖ ≤ 1, U orthogonal
  double injectivity_margin = 0.0; // σ_min(I − TᵀT) for the contraction T = S-field
  bool position_p_prime = false;
};

struct InvolutionCertificate {
  Matrix S;
  double C = 0.0;                        // closed-form constant from the graph form
  Subspace K_plus = Subspace::zero(0);   // ker(S − I)
  Subspace K_minus = Subspace::zero(0);  // ker(S + I)
  double involution_residual = 0.0;      // ‖S² − I‖₂
  double exchange_residual = 0.0;        // distance between S(M) and N
  double lower_bound_attained = 0.0;     // σ_min((I + S) B_M)
  double projection_residual = 0.0;      // ‖P_{K+∥K−} − (I + S)/2‖₂
};

struct OrthocomplementCheck {
  bool holds = false;
  std::optional<GraphForm> form;       // graph form over K = M⊥ when holds
  std::optional<Matrix> contraction;   // T with {M, N} ≅ {Gr(−T), Gr(T)}
  double surjectivity_margin = 0.0;    // σ_min(I − T Tᵀ)
};

struct ReducedPair {
  Subspace M1;
  Subspace N1;
  Subspace L;  // M ∩ N
};

struct ClosedCompanion {
  Subspace N1;
  double C_prime = 0.0;
  double C = 0.0;             // ‖P_{M∥K}‖ on M + N (at least 1)
  double inverse_norm = 0.0;  // ‖U⁻¹‖ with U = P_{M∥K}|_N
  double attained = 0.0;      // σ-based lower bound on ‖x+y‖/(‖x‖+‖y‖)
};

/// Orthogonal involution S with S(M) = N and ⟨Sx, x⟩ ≥ 0 on M.
Matrix exchanging_symmetry(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// Common complement built from the −1 eigenspace of the exchanging symmetry
/// on M + N, extended by (M + N)⊥.
ComplementCertificate common_complement(const Subspace& m, const Subspace& n,
                                        const TolerancePolicy& tol = {});

/// Checks that K complements both M and N and builds both oblique projections.
ComplementCertificate verify_common_complement(const Subspace& m, const Subspace& n,
                                               const Subspace& k, const TolerancePolicy& tol = {});

/// Graph form with X1 = K⊥, X2 = K.
GraphForm graph_pair_form(const Subspace& m, const Subspace& n, const Subspace& k,
                          const TolerancePolicy& tol = {});

/// Graph form with X1 = M, so that T = 0. Uses common_complement(M, N)
/// unless a complement is supplied.
GraphForm zero_graph_form(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});
GraphForm zero_graph_form(const Subspace& m, const Subspace& n, const Subspace& k,
                          const TolerancePolicy& tol = {});

/// The zero form sheared into {Gr(−T), Gr(T)}: the S-field is T = S₀/2 and
/// the T-field is −T.
GraphForm antisymmetric_graph_form(const Subspace& m, const Subspace& n,
                                   const TolerancePolicy& tol = {});
GraphForm antisymmetric_graph_form(const Subspace& m, const Subspace& n, const Subspace& k,
                                   const TolerancePolicy& tol = {});

/// Distances between U(M) and Gr(T), and between U(N) and Gr(S).
GraphResiduals graph_form_residuals(const Subspace& m, const Subspace& n, const GraphForm& form,
                                    const TolerancePolicy& tol = {});

/// Involution exchanging M and N with ‖x + Sx‖ ≥ C‖x‖ on M. When `k` is
/// given, K ∩ (M + N) is used as the complement inside M + N.
InvolutionCertificate involution_for_pair(const Subspace& m, const Subspace& n,
                                          const TolerancePolicy& tol = {});
InvolutionCertificate involution_for_pair(const Subspace& m, const Subspace& n,
                                          const Subspace& k, const TolerancePolicy& tol = {});

/// Residual checks of an involution against a pair (no construction).
InvolutionCertificate inspect_involution(const Subspace& m, const Subspace& n, const Matrix& s,
                                         const TolerancePolicy& tol = {});

/// ker(S + I) ∩ (M + N), extended by (M + N)⊥, verified as a common complement.
ComplementCertificate complement_from_involution(const Subspace& m, const Subspace& n,
                                                 const Matrix& s, const TolerancePolicy& tol = {});

/// Kernel of the projection P(x + y) = Ux + y on M + N, extended by (M + N)⊥.
/// `u_map` is an n x n matrix whose restriction to M maps onto N.
ComplementCertificate projection_from_isomorphism(const Subspace& m, const Subspace& n,
                                                  const Matrix& u_map, double c,
                                                  const TolerancePolicy& tol = {});

/// Whether M⊥ complements both M and N.
OrthocomplementCheck orthocomplement_common_complement(const Subspace& m, const Subspace& n,
                                                       const TolerancePolicy& tol = {});

/// Unitary graph form {Gr(−T), Gr(T)} with T a contraction.
ContractionForm contraction_graph_form(const Subspace& m, const Subspace& n,
                                       const TolerancePolicy& tol = {});

/// Strips the common part L = M ∩ N.
ReducedPair reduce_pair(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// Given a common complement K and M1 ⊆ M, the subspace N1 = U⁻¹(M ⊖ M1) of N
/// and the constant C′ bounding ‖x + y‖ ≥ C′(‖x‖ + ‖y‖) on N1 × M1.
ClosedCompanion closed_companion(const Subspace& m, const Subspace& n, const Subspace& k,
                                 const Subspace& m1, const TolerancePolicy& tol = {});

}  // namespace ccomp
