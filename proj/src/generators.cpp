#include "strateq/generators.hpp"

#include <random>
#include <stdexcept>

#include "draw_internal.hpp"
#include "strateq/equivalence.hpp"

namespace strateq {

BimatrixGame GroundTruth::reconstruct() const {
  const int m = base_a.rows();
  const int n = base_a.cols();
  GameMatrix a_tilde(m, n);
  GameMatrix b_tilde(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      a_tilde.at(i, j) = alpha1 * base_a.at(i, j) + beta1 * u[j - 1];
      b_tilde.at(i, j) = -(alpha2 * base_a.at(i, j)) + beta2 * v[i - 1];
    }
  }
  return {std::move(a_tilde), std::move(b_tilde)};
}

std::pair<BimatrixGame, GroundTruth> gen_pat_zero_sum(int m, int n, std::uint64_t seed,
                                                      ValueRange value_range) {
  if (value_range.lo > value_range.hi)
    throw std::invalid_argument("empty value range");
  std::mt19937_64 rng(seed);
  internal::PatDraw draw = internal::draw_pat(m, n, rng, value_range.lo, value_range.hi);

  GameMatrix base(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) base.at(i, j) = Rational(draw.kernel.at(i, j));
  }
  GroundTruth truth{.base_a = std::move(base),
                    .alpha1 = Rational(draw.alpha1),
                    .alpha2 = Rational(draw.alpha2),
                    .beta1 = Rational(draw.beta1),
                    .beta2 = Rational(draw.beta2),
                    .u = RatVector(draw.u.begin(), draw.u.end()),
                    .v = RatVector(draw.v.begin(), draw.v.end()),
                    .expected_gamma = Rational(draw.alpha2) / Rational(draw.alpha1)};
  BimatrixGame game = truth.reconstruct();
  return {std::move(game), std::move(truth)};
}

BimatrixGame gen_pure_ne(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return internal::to_exact(internal::draw_pure_ne(m, n, rng));
}

BimatrixGame gen_non_equivalent(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool odd_seed = (seed & 1u) != 0;
  for (int attempt = 0; attempt < 100; ++attempt) {
    internal::NonEquivalentDraw draw = internal::draw_non_equivalent(m, n, rng, odd_seed);
    BimatrixGame game = internal::to_exact(draw.game);
    EquivalenceReport report = classify(game);
    if (report.verdict == Verdict::NotEquivalentViaPAT && report.reason == draw.expected_reason)
      return game;
  }
  throw std::logic_error("non-equivalent generation failed certification repeatedly");
}

}  // namespace strateq
