#pragma once

#include <cstdint>
#include <utility>

#include "strateq/matrix.hpp"

namespace strateq {

struct ValueRange {
  long lo = -50;
  long hi = 50;
};

/// The transformation parameters behind a generated game:
///   a_tilde =  alpha1 * base_a + beta1 * 1_m u^T
///   b_tilde = -alpha2 * base_a + beta2 * v 1_n^T
/// with alpha1, alpha2 > 0, so the game is strategically equivalent to
/// (base_a, -base_a) by construction and the classifier must recover
/// expected_gamma = alpha2 / alpha1.
struct GroundTruth {
  GameMatrix base_a;
  Rational alpha1;
  Rational alpha2;
  Rational beta1;
  Rational beta2;
  RatVector u;
  RatVector v;
  Rational expected_gamma;

  BimatrixGame reconstruct() const;
};

/// Draws the zero-sum kernel uniformly over value_range (redrawing the rare
/// kernels that land inside the subspace M), positive integer alphas, and
/// integer betas / u / v of the same magnitude. Deterministic per seed.
std::pair<BimatrixGame, GroundTruth> gen_pat_zero_sum(int m, int n, std::uint64_t seed,
                                                      ValueRange value_range = {});

/// One payoff matrix is built inside M (so a pure equilibrium is guaranteed),
/// the other is arbitrary; which side is in M depends on the seed.
BimatrixGame gen_pure_ne(int m, int n, std::uint64_t seed);

/// Games certified not equivalent to any zero-sum game via a positive affine
/// transformation. Even seeds build b_tilde = c * a_tilde + (matrix in M)
/// with c > 0, which forces a negative gamma; odd seeds take a PAT game and
/// perturb a single b_tilde entry so D leaves the subspace. Sizes with
/// min(m, n) == 2 always use the gamma-negative family (breaking D's
/// membership is impossible there). The emitted game is re-drawn until
/// classify confirms the intended verdict. Requires min(m, n) >= 2.
BimatrixGame gen_non_equivalent(int m, int n, std::uint64_t seed);

}  // namespace strateq
