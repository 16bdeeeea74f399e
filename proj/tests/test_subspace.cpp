#include "helpers.hpp"

#include <sampling.hpp>

using namespace ccomp;
using namespace ccomp::test;

TEST(Subspace, ConstructorChecksOrthonormality) {
  EXPECT_ERROR_KIND(Subspace(mat({{1}, {1}})), ErrorKind::Input);
  EXPECT_NO_THROW(Subspace(mat({{1}, {0}})));
}

TEST(Subspace, FromSpanning) {
  EXPECT_EQ(span({vec({1, 0}), vec({2, 0})}, 2).dim(), 1);
  EXPECT_EQ(Subspace::from_spanning({}, 3).dim(), 0);
  const Subspace s = span({vec({1, 1, 0}), vec({1, -1, 0})}, 3);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(same_span(s.basis(), mat({{1, 0}, {0, 1}, {0, 0}})));
  EXPECT_ERROR_KIND(span({vec({1, 0})}, 3), ErrorKind::Input);
}

TEST(Subspace, Orthocomplement) {
  EXPECT_TRUE(equals(orthocomplement(span({e(1, 2)}, 2)), span({e(2, 2)}, 2)));
  EXPECT_TRUE(orthocomplement(Subspace::full(3)).is_zero());
  const Subspace c = orthocomplement(span({vec({1, 1})}, 2));
  ASSERT_EQ(c.dim(), 1);
  EXPECT_NEAR(std::abs(c.basis().col(0).dot(vec({1, -1}) / std::sqrt(2.0))), 1.0, 1e-15);
}

TEST(Subspace, Intersect) {
  const Subspace m = span({e(1, 4), e(2, 4)}, 4);
  EXPECT_TRUE(equals(intersect(m, m), m));
  EXPECT_TRUE(intersect(span({e(1, 2)}, 2), span({e(2, 2)}, 2)).is_zero());
  const Subspace l = intersect(m, span({e(1, 4), e(3, 4)}, 4));
  ASSERT_EQ(l.dim(), 1);
  EXPECT_TRUE(same_span(l.basis(), e(1, 4)));
  EXPECT_ERROR_KIND(intersect(m, Subspace::full(3)), ErrorKind::Input);
}

TEST(Subspace, Sum) {
  const Subspace m = span({e(1, 3)}, 3);
  EXPECT_TRUE(equals(sum(m, Subspace::zero(3)), m));
  EXPECT_TRUE(equals(sum(m, span({e(2, 3)}, 3)), span({e(1, 3), e(2, 3)}, 3)));
  // oracle: dim(M+N) = dim M + dim N - dim(M∩N) = 2 + 2 - 1
  EXPECT_EQ(sum(span({e(1, 4), e(2, 4)}, 4), span({e(1, 4), e(3, 4)}, 4)).dim(), 2 + 2 - 1);
  EXPECT_ERROR_KIND(sum(m, Subspace::zero(2)), ErrorKind::Input);
}

TEST(Subspace, Contains) {
  const Subspace m = span({e(1, 2)}, 2);
  EXPECT_TRUE(contains(m, e(1, 2)));
  EXPECT_FALSE(contains(m, e(2, 2)));
  EXPECT_TRUE(contains(span({vec({1, 1})}, 2), vec({1, 1}) / std::sqrt(2.0)));
  EXPECT_TRUE(contains(m, Vector::Zero(2)));
}

TEST(Subspace, Equals) {
  const Subspace m = span({e(1, 2)}, 2);
  EXPECT_TRUE(equals(m, m));
  EXPECT_TRUE(equals(span({vec({1, 0})}, 2), span({vec({2, 0})}, 2)));
  EXPECT_FALSE(equals(m, span({e(2, 2)}, 2)));
  EXPECT_FALSE(equals(m, Subspace::full(2)));
  EXPECT_ERROR_KIND(equals(m, Subspace::full(3)), ErrorKind::Input);
}

TEST(Subspace, Projector) {
  EXPECT_MAT_NEAR(projector(span({e(1, 2)}, 2)), mat({{1, 0}, {0, 0}}), 0.0);
  EXPECT_MAT_NEAR(projector(Subspace::full(2)), Matrix::Identity(2, 2), 1e-15);
  const Vector u = vec({1, 1}) / std::sqrt(2.0);
  EXPECT_MAT_NEAR(projector(span({u}, 2)), u * u.transpose(), 1e-15);
  EXPECT_MAT_NEAR(projector(span({u}, 2)), mat({{.5, .5}, {.5, .5}}), 1e-15);
}

TEST(Subspace, ZeroAndFull) {
  const Subspace z = Subspace::zero(0);
  EXPECT_EQ(z.ambient_dim(), 0);
  EXPECT_TRUE(equals(orthocomplement(Subspace::zero(3)), Subspace::full(3)));
  EXPECT_EQ(subspace_distance(Subspace::zero(3), Subspace::zero(3)), 0.0);
}

TEST(Subspace, RelativeComplementAndImage) {
  const Subspace m = span({e(1, 3), e(2, 3)}, 3);
  const Subspace inner = span({e(1, 3)}, 3);
  const Subspace rc = relative_complement(m, inner);
  EXPECT_TRUE(equals(rc, span({e(2, 3)}, 3)));
  const Matrix swap = mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  EXPECT_TRUE(equals(image(swap, inner), span({e(3, 3)}, 3)));
  EXPECT_TRUE(is_subspace_of(inner, m));
  EXPECT_FALSE(is_subspace_of(m, inner));
}

class SubspaceLaws : public ::testing::Test {
 protected:
  cli::Sampler sampler{4242};
};

TEST_F(SubspaceLaws, DeMorganOnSeededPairs) {
  for (int t = 0; t < 500; ++t) {
    const Index n = sampler.uniform(1, 10);
    const auto p = cli::random_pair(sampler, n);
    const Subspace lhs = orthocomplement(sum(p.M, p.N));
    const Subspace rhs = intersect(orthocomplement(p.M), orthocomplement(p.N));
    ASSERT_TRUE(equals(lhs, rhs)) << "t=" << t << " n=" << n;
  }
}

TEST_F(SubspaceLaws, DoubleComplementDimsAndProjector) {
  for (int t = 0; t < 300; ++t) {
    const Index n = sampler.uniform(1, 10);
    const Subspace m = sampler.subspace(n, sampler.uniform(0, n));
    const Subspace c = orthocomplement(m);
    ASSERT_EQ(m.dim() + c.dim(), n);
    ASSERT_TRUE(equals(orthocomplement(c), m));
    const Matrix p = projector(m);
    const Matrix x = sampler.gaussian(n, 4);
    for (Index j = 0; j < x.cols(); ++j) ASSERT_TRUE(contains(m, p * x.col(j)));
    // oracle projector from the raw Gram matrix
    EXPECT_LE(max_abs(p - projector_oracle(m.basis())), 1e-10);
  }
}
