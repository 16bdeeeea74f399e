#pragma once

// Seeded Gaussian sampling of subspaces, shared by the `sample-pair`
// subcommand, the tests and the benchmarks.

#include <ccomp/ccomp.hpp>

#include <cstdint>
#include <random>

namespace ccomp::cli {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Matrix gaussian(Index rows, Index cols);
  Index uniform(Index lo, Index hi);  // inclusive
  double uniform_real(double lo, double hi);

  /// span of `dim` Gaussian vectors in R^n
  Subspace subspace(Index n, Index dim, const TolerancePolicy& tol = {});

  /// Invertible map Q1 diag(s) Q2ᵀ with singular values log-uniform in [1, cond].
  Matrix invertible(Index n, double cond);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct SampledPair {
  Subspace M;
  Subspace N;
};

/// Both dims drawn uniformly from 0..n.
SampledPair random_pair(Sampler& s, Index n, const TolerancePolicy& tol = {});

/// dim M = dim N drawn uniformly from 0..n.
SampledPair random_equal_pair(Sampler& s, Index n, const TolerancePolicy& tol = {});

}  // namespace ccomp::cli
