#include "helpers.hpp"

#include <sampling.hpp>

using namespace ccomp;
using namespace ccomp::test;

namespace {

Subspace E(Index i, Index n) { return span({e(i, n)}, n); }
Subspace diag2() { return span({vec({1, 1})}, 2); }

// ambient vector as a 1-column matrix
Matrix col(const Vector& v) { return v; }

}  // namespace

TEST(ExchangingSymmetry, Examples) {
  EXPECT_MAT_NEAR(exchanging_symmetry(E(1, 2), E(1, 2)), Matrix::Identity(2, 2), 1e-15);
  EXPECT_MAT_NEAR(exchanging_symmetry(E(1, 2), E(2, 2)), mat({{0, 1}, {1, 0}}), 1e-15);
  // oracle: reflection across the bisector b = (cos π/8, sin π/8) is 2bbᵀ − I
  const Vector b = vec({std::cos(pi() / 8), std::sin(pi() / 8)});
  const Matrix refl = 2 * b * b.transpose() - Matrix::Identity(2, 2);
  EXPECT_MAT_NEAR(exchanging_symmetry(E(1, 2), diag2()), refl, 1e-15);
}

TEST(ExchangingSymmetry, RejectsUnequalPosition) {
  EXPECT_ERROR_KIND(exchanging_symmetry(span({e(1, 3), e(2, 3)}, 3), E(1, 3)),
                    ErrorKind::Precondition);
}

TEST(CommonComplement, Examples) {
  auto c = common_complement(E(1, 2), E(2, 2));
  EXPECT_TRUE(same_span(c.K.basis(), col(e(1, 2) - e(2, 2))));

  c = common_complement(E(1, 3), E(2, 3));
  Matrix k(3, 2);
  k << e(1, 3) - e(2, 3), e(3, 3);
  EXPECT_TRUE(same_span(c.K.basis(), k));

  const Subspace m = span({e(1, 3), e(2, 3) + e(3, 3)}, 3);
  c = common_complement(m, m);
  EXPECT_TRUE(equals(c.K, orthocomplement(m)));
  EXPECT_LE(c.inverse_residual, 1e-9);

  EXPECT_ERROR_KIND(common_complement(span({e(1, 3), e(2, 3)}, 3), E(1, 3)),
                    ErrorKind::NoComplement);
}

TEST(VerifyCommonComplement, Examples) {
  const auto c = verify_common_complement(E(1, 2), diag2(), E(2, 2));
  // oracle: P_{M∥K} with M = e1, K = e2 is diag(1, 0)
  EXPECT_MAT_NEAR(c.P_M_along_K, mat({{1, 0}, {0, 0}}), 1e-15);
  // P_{N∥K}: x = a(1,1) + b e2 gives a = x1
  EXPECT_MAT_NEAR(c.P_N_along_K, mat({{1, 0}, {1, 0}}), 1e-15);

  try {
    verify_common_complement(E(1, 2), E(2, 2), E(1, 2));
    ADD_FAILURE() << "expected invalid certificate";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidCertificate);
    EXPECT_NE(std::string(err.what()).find("M ∩ K"), std::string::npos) << err.what();
  }

  const Subspace m = span({e(1, 4), e(2, 4)}, 4);
  const Subspace n = span({e(1, 4), e(3, 4)}, 4);
  EXPECT_NO_THROW(verify_common_complement(m, n, span({e(4, 4), e(2, 4) + e(3, 4)}, 4)));
  // wrong dimension
  EXPECT_ERROR_KIND(verify_common_complement(m, n, E(4, 4)), ErrorKind::InvalidCertificate);
}

TEST(GraphPairForm, Examples) {
  auto f = graph_pair_form(E(1, 2), diag2(), E(2, 2));
  EXPECT_MAT_NEAR(f.T, mat({{0}}), 1e-15);
  EXPECT_MAT_NEAR(f.S, mat({{1}}), 1e-15);
  EXPECT_MAT_NEAR(f.U, Matrix::Identity(2, 2), 1e-15);

  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  f = graph_pair_form(m, m, orthocomplement(m));
  EXPECT_LE(max_abs(f.T), 1e-15);
  EXPECT_LE(max_abs(f.S), 1e-15);

  const Subspace m4 = span({e(1, 4), e(2, 4)}, 4);
  const Subspace n4 = span({e(1, 4), e(3, 4)}, 4);
  f = graph_pair_form(m4, n4, span({e(4, 4), e(2, 4) + e(3, 4)}, 4));
  EXPECT_EQ(f.dim_X1, 2);
  EXPECT_EQ(f.dim_X2, 2);
  const auto r = graph_form_residuals(m4, n4, f);
  EXPECT_LE(r.distance_M, 1e-9);
  EXPECT_LE(r.distance_N, 1e-9);

  EXPECT_ERROR_KIND(graph_pair_form(E(1, 2), E(2, 2), E(1, 2)), ErrorKind::InvalidCertificate);
}

TEST(ZeroGraphForm, Examples) {
  auto f = zero_graph_form(E(1, 2), diag2(), E(2, 2));
  EXPECT_LE(max_abs(f.T), 1e-15);
  EXPECT_MAT_NEAR(f.S, mat({{1}}), 1e-15);

  f = zero_graph_form(diag2(), diag2());
  EXPECT_LE(max_abs(f.S), 1e-15);

  // G₂⁻¹e₁ − e₁ = e₂ − e₁ lies in K; in K's own basis that is S.
  const Subspace k = common_complement(E(1, 2), E(2, 2)).K;
  f = zero_graph_form(E(1, 2), E(2, 2));
  ASSERT_EQ(f.S.rows(), 1);
  EXPECT_MAT_NEAR(k.basis() * f.S, col(e(2, 2) - e(1, 2)), 1e-15);
  const auto r = graph_form_residuals(E(1, 2), E(2, 2), f);
  EXPECT_LE(std::max(r.distance_M, r.distance_N), 1e-9);

  EXPECT_ERROR_KIND(zero_graph_form(Subspace::full(2), E(1, 2)), ErrorKind::NoComplement);
}

TEST(AntisymmetricGraphForm, Examples) {
  auto f = antisymmetric_graph_form(E(1, 2), diag2(), E(2, 2));
  EXPECT_MAT_NEAR(f.S, mat({{0.5}}), 1e-15);
  EXPECT_MAT_NEAR(f.T, mat({{-0.5}}), 1e-15);
  EXPECT_MAT_NEAR(f.U, mat({{1, 0}, {-0.5, 1}}), 1e-15);

  f = antisymmetric_graph_form(diag2(), diag2());
  EXPECT_LE(max_abs(f.T), 1e-15);

  const Matrix s0 = zero_graph_form(E(1, 2), E(2, 2)).S;
  f = antisymmetric_graph_form(E(1, 2), E(2, 2));
  EXPECT_MAT_NEAR(f.S, 0.5 * s0, 1e-15);
  EXPECT_TRUE(f.T == -f.S);
  const auto r = graph_form_residuals(E(1, 2), E(2, 2), f);
  EXPECT_LE(std::max(r.distance_M, r.distance_N), 1e-9);

  EXPECT_ERROR_KIND(antisymmetric_graph_form(Subspace::full(2), E(1, 2)),
                    ErrorKind::NoComplement);
}

TEST(Involution, Examples) {
  auto c = involution_for_pair(E(1, 2), diag2(), E(2, 2));
  EXPECT_MAT_NEAR(c.S, mat({{1, 0}, {1, -1}}), 1e-15);
  EXPECT_MAT_NEAR(c.S * c.S, Matrix::Identity(2, 2), 1e-15);
  EXPECT_MAT_NEAR(c.S * e(1, 2), col(vec({1, 1})), 1e-15);
  EXPECT_GE(c.lower_bound_attained, c.C - 1e-9);

  c = involution_for_pair(E(1, 2), E(2, 2));
  EXPECT_MAT_NEAR(c.S, mat({{0, 1}, {1, 0}}), 1e-15);
  EXPECT_NEAR(c.lower_bound_attained, std::sqrt(2.0), 1e-15);

  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  c = involution_for_pair(m, m);
  EXPECT_MAT_NEAR(c.S * m.basis(), m.basis(), 1e-15);
  EXPECT_NEAR(c.lower_bound_attained, 2.0, 1e-15);
  EXPECT_LE(c.projection_residual, 1e-9);

  EXPECT_ERROR_KIND(involution_for_pair(m, E(1, 3)), ErrorKind::NoComplement);
}

TEST(ComplementFromInvolution, Examples) {
  auto c = complement_from_involution(E(1, 2), diag2(), mat({{1, 0}, {1, -1}}));
  EXPECT_TRUE(equals(c.K, E(2, 2)));
  c = complement_from_involution(E(1, 2), E(2, 2), mat({{0, 1}, {1, 0}}));
  EXPECT_TRUE(same_span(c.K.basis(), col(e(1, 2) - e(2, 2))));
  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  c = complement_from_involution(m, m, Matrix::Identity(3, 3));
  EXPECT_TRUE(equals(c.K, orthocomplement(m)));
}

TEST(ComplementFromInvolution, RejectsBadInvolutions) {
  // not an involution
  EXPECT_ERROR_KIND(complement_from_involution(E(1, 2), E(2, 2), mat({{0, 2}, {1, 0}})),
                    ErrorKind::InvalidInvolution);
  // involution that does not exchange the pair
  EXPECT_ERROR_KIND(complement_from_involution(E(1, 2), E(2, 2), Matrix::Identity(2, 2)),
                    ErrorKind::InvalidInvolution);
  // S(M) = N but I + S vanishes on M: S = -I exchanges M = N with itself
  EXPECT_ERROR_KIND(complement_from_involution(E(1, 2), E(1, 2), -Matrix::Identity(2, 2)),
                    ErrorKind::InvalidInvolution);
  EXPECT_ERROR_KIND(complement_from_involution(E(1, 2), E(2, 2), Matrix::Identity(3, 3)),
                    ErrorKind::Input);
}

TEST(ProjectionFromIsomorphism, Examples) {
  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  auto c = projection_from_isomorphism(m, m, Matrix::Identity(3, 3), 1.0);
  EXPECT_TRUE(equals(c.K, orthocomplement(m)));

  // U: e1 ↦ e2. Oracle P(x1, x2) = (0, x1 + x2), whose norm is √2.
  const Matrix u = mat({{0, 0}, {1, 0}});
  const Matrix p = mat({{0, 0}, {1, 1}});
  const double norm_p = svd(p).sigma(0);
  EXPECT_NEAR(norm_p, std::sqrt(2.0), 1e-15);
  c = projection_from_isomorphism(E(1, 2), E(2, 2), u, norm_p);
  EXPECT_TRUE(same_span(c.K.basis(), col(e(1, 2) - e(2, 2))));
  EXPECT_MAT_NEAR(c.P_N_along_K, p, 1e-14);
  // C = 1 is below ‖P‖ and must be refused
  EXPECT_ERROR_KIND(projection_from_isomorphism(E(1, 2), E(2, 2), u, 1.0),
                    ErrorKind::Precondition);

  EXPECT_ERROR_KIND(projection_from_isomorphism(E(1, 2), E(1, 2), u, 10.0),
                    ErrorKind::Precondition);
}

TEST(OrthocomplementCheck, Examples) {
  auto r = orthocomplement_common_complement(E(1, 2), diag2());
  EXPECT_TRUE(r.holds);
  EXPECT_NO_THROW(verify_common_complement(E(1, 2), diag2(), E(2, 2)));
  r = orthocomplement_common_complement(E(1, 2), E(2, 2));
  EXPECT_FALSE(r.holds);
  r = orthocomplement_common_complement(diag2(), diag2());
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.contraction.has_value());
  EXPECT_LE(max_abs(*r.contraction), 1e-15);
  EXPECT_NEAR(r.surjectivity_margin, 1.0, 1e-15);
}

TEST(ContractionForm, Examples) {
  auto c = contraction_graph_form(E(1, 2), E(2, 2));
  EXPECT_NEAR(spectral_norm(c.form.T), 1.0, 1e-15);
  EXPECT_NEAR(c.injectivity_margin, 0.0, 1e-15);
  EXPECT_FALSE(c.position_p_prime);

  c = contraction_graph_form(diag2(), diag2());
  EXPECT_LE(max_abs(c.form.T), 1e-15);

  // oracle: Gr(±t) meet at angle 2·atan(t); π/4 gives t = tan(π/8)
  c = contraction_graph_form(E(1, 2), diag2());
  EXPECT_NEAR(spectral_norm(c.form.T), std::tan(pi() / 8), 1e-15);
  EXPECT_GT(c.injectivity_margin, 0.0);
  EXPECT_TRUE(c.position_p_prime);
  EXPECT_MAT_NEAR(c.form.U * c.form.U.transpose(), Matrix::Identity(2, 2), 1e-14);
  const auto r = graph_form_residuals(E(1, 2), diag2(), c.form);
  EXPECT_LE(std::max(r.distance_M, r.distance_N), 1e-9);

  EXPECT_ERROR_KIND(contraction_graph_form(Subspace::full(2), E(1, 2)), ErrorKind::Precondition);
}

TEST(ReducePair, Examples) {
  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  auto r = reduce_pair(m, m);
  EXPECT_TRUE(r.M1.is_zero());
  EXPECT_TRUE(r.N1.is_zero());
  EXPECT_TRUE(equals(r.L, m));

  r = reduce_pair(E(1, 3), E(2, 3));
  EXPECT_TRUE(equals(r.M1, E(1, 3)));
  EXPECT_TRUE(equals(r.N1, E(2, 3)));
  EXPECT_TRUE(r.L.is_zero());

  r = reduce_pair(span({e(1, 4), e(2, 4)}, 4), span({e(1, 4), e(3, 4)}, 4));
  EXPECT_TRUE(equals(r.M1, E(2, 4)));
  EXPECT_TRUE(equals(r.N1, E(3, 4)));
  EXPECT_TRUE(equals(r.L, E(1, 4)));
}

TEST(ClosedCompanion, Examples) {
  const Subspace m = span({e(1, 4), e(2, 4)}, 4);
  const Subspace k = span({e(3, 4), e(4, 4)}, 4);
  auto c = closed_companion(m, m, k, E(1, 4));
  EXPECT_TRUE(equals(c.N1, E(2, 4)));
  EXPECT_NEAR(c.C_prime, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_GE(c.attained, c.C_prime - 1e-12);

  c = closed_companion(m, m, k, m);
  EXPECT_TRUE(c.N1.is_zero());

  c = closed_companion(E(1, 2), diag2(), E(2, 2), Subspace::zero(2));
  EXPECT_TRUE(equals(c.N1, diag2()));

  EXPECT_ERROR_KIND(closed_companion(m, m, k, E(3, 4)), ErrorKind::Precondition);
}

class WitnessLaws : public ::testing::Test {
 protected:
  cli::Sampler sampler{31337};
};

TEST_F(WitnessLaws, InvolutionRoundTrip) {
  for (int t = 0; t < 300; ++t) {
    const Index n = sampler.uniform(1, 10);
    const auto p = cli::random_equal_pair(sampler, n);
    const auto inv = involution_for_pair(p.M, p.N);
    ASSERT_LE(inv.involution_residual, 1e-9);
    ASSERT_LE(inv.exchange_residual, 1e-9);
    const auto c = complement_from_involution(p.M, p.N, inv.S);
    ASSERT_LE(c.inverse_residual, 1e-9);
  }
}

TEST_F(WitnessLaws, SplittingOffTheCommonPart) {
  // pairs with an exact common part L
  for (int t = 0; t < 200; ++t) {
    const Index n = sampler.uniform(2, 9);
    const Index l = sampler.uniform(1, n / 2);
    const Index d = sampler.uniform(0, (n - l) / 2);
    const Matrix bl = sampler.gaussian(n, l);
    Matrix gm(n, l + d), gn(n, l + d);
    gm << bl, sampler.gaussian(n, d);
    gn << bl, sampler.gaussian(n, d);
    const Subspace m = Subspace::from_columns(gm);
    const Subspace nn = Subspace::from_columns(gn);
    const auto r = reduce_pair(m, nn);
    ASSERT_EQ(r.L.dim(), l);
    const ComplementCertificate c = common_complement(m, nn);
    // the complement of the pair, with L added back, complements the reduced pair
    EXPECT_NO_THROW(verify_common_complement(r.M1, r.N1, sum(r.L, c.K))) << "t=" << t;
    EXPECT_EQ(has_common_complement(m, nn).decision,
              has_common_complement(r.M1, r.N1).decision);
  }
}

TEST_F(WitnessLaws, CertificateYieldsBoundedIsomorphism) {
  for (int t = 0; t < 200; ++t) {
    const Index n = sampler.uniform(1, 8);
    const auto p = cli::random_equal_pair(sampler, n);
    if (p.M.dim() == 0) continue;
    const auto c = common_complement(p.M, p.N);
    const Matrix u = c.P_N_along_K;
    // U maps M onto N and fixes M ∩ N
    EXPECT_LE(subspace_distance(image(u, p.M), p.N), 1e-9);
    const Subspace l = intersect(p.M, p.N);
    if (l.dim() > 0) EXPECT_LE(max_abs(u * l.basis() - l.basis()), 1e-9);
    const double bound = spectral_norm(u);
    EXPECT_NO_THROW(projection_from_isomorphism(p.M, p.N, u, bound)) << "t=" << t;
  }
}
