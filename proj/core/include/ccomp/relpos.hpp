#pragma once

// Relative position of a pair of subspaces: principal angles, the four
// corner intersections, the spectrum of G*G with G = P_N restricted to M,
// the spectral-count and cone-codimension tests, and the master decision
// on whether a common complement exists.

#include "ccomp/subspace.hpp"

#include <string>
#include <vector>

namespace ccomp {

struct PairDecomposition {
  Index dim_m = 0;
  Index dim_n = 0;
  Index dim_MN = 0;            // dim M ∩ N
  Index dim_M_Nperp = 0;       // dim M ∩ N⊥
  Index dim_Mperp_N = 0;       // dim M⊥ ∩ N
  Index dim_Mperp_Nperp = 0;   // dim M⊥ ∩ N⊥
  Index generic_mult = 0;      // angles strictly inside (0, π/2)
  std::vector<double> angles;          // M-sided, ascending, length dim M
  std::vector<double> gram_spectrum;   // eigenvalues of G*G, descending
};

struct PositionReport {
  PairDecomposition decomposition;
  bool generic_position = false;
  bool generalized_generic = false;
  bool position_p_prime = false;
  bool equivalently_positioned = false;
  bool dims_equal = false;
  bool reduced_dims_equal = false;
};

struct ConeReport {
  double epsilon = 0.0;
  Index max_subspace_dim_M = 0;
  Index max_subspace_dim_N = 0;
  Index ulc_M = 0;
  Index ulc_N = 0;
};

struct SpectralCountResult {
  bool holds = false;
  Index left_count = 0;
  Index right_count = 0;
  Index spectral_count = 0;
};

struct CrossChecks {
  double epsilon = 0.0;
  bool dims_equal = false;
  bool equivalently_positioned = false;
  bool spectral_count = false;
  bool cone_codimension = false;
  bool reduced_dims_equal = false;
};

struct ComplementDecision {
  bool decision = false;
  CrossChecks cross_checks;
};

/// Principal angles θ_1 ≤ ... of M against N, min(dim M, dim N) of them.
std::vector<double> principal_angles(const Subspace& m, const Subspace& n);

/// M-sided multiset: the cross angles padded with π/2 up to length dim M.
std::vector<double> principal_angles_padded(const Subspace& m, const Subspace& n);

/// Sines of the M-sided padded angles, ascending, computed directly as the
/// singular values of (I - P_N) B_M.
std::vector<double> principal_sines_padded(const Subspace& m, const Subspace& n);

PairDecomposition pair_decomposition(const Subspace& m, const Subspace& n,
                                     const TolerancePolicy& tol = {});

PositionReport classify(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// Eigenvalue-count form of the Lauzon–Treil criterion at a fixed epsilon.
SpectralCountResult lauzon_treil_check(const Subspace& m, const Subspace& n, double epsilon,
                                       const TolerancePolicy& tol = {});

/// "For all sufficiently small ε" reading: the check holds at the default
/// epsilon and at every halving of it down to `levels` steps.
bool lauzon_treil_for_small_epsilon(const Subspace& m, const Subspace& n,
                                    const TolerancePolicy& tol = {}, int levels = 8);

ConeReport cone_report(const Subspace& m, const Subspace& n, double epsilon,
                       const TolerancePolicy& tol = {});

bool cone_codimensions_equal_for_small_epsilon(const Subspace& m, const Subspace& n,
                                               const TolerancePolicy& tol = {}, int levels = 8);

/// Smallest strictly positive principal-angle sine; 1 when there is none.
double sum_closedness_margin(const Subspace& m, const Subspace& n,
                             const TolerancePolicy& tol = {});

/// min(1/2, margin/2).
double default_epsilon(const Subspace& m, const Subspace& n, const TolerancePolicy& tol = {});

/// dim M == dim N, cross-checked against four equivalent criteria. A
/// disagreement throws ErrorKind::NumericalFailure.
ComplementDecision has_common_complement(const Subspace& m, const Subspace& n,
                                         const TolerancePolicy& tol = {});

/// Same, but with an explicit epsilon for the spectral and cone checks.
ComplementDecision has_common_complement(const Subspace& m, const Subspace& n, double epsilon,
                                         const TolerancePolicy& tol = {});

}  // namespace ccomp
