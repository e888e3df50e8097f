#pragma once

#include <optional>
#include <utility>

#include "strateq/matrix.hpp"
#include "strateq/subspace.hpp"

namespace strateq {

enum class Verdict { PureStrategyNE, StrategicallyZeroSum, NotEquivalentViaPAT };

enum class Refusal { WitnessIndexMismatch, GammaNonPositive, DNotInM };

// Which construction produced the equivalent zero-sum game, keyed by the
// shape of D = b_tilde + gamma * a_tilde.
enum class RankCase {
  Rank0,        // D = 0
  Rank1ColOnes, // D = 1_m u^T (constant columns)
  Rank1RowOnes, // D = v 1_n^T (constant rows)
  Rank2,        // full decomposition D = row_part + col_part
};

const char* to_token(Verdict v);
const char* to_token(Refusal r);
const char* to_token(RankCase c);

/// gamma = -alpha2 / alpha1 together with the shared balanced witness pair
/// it was computed from.
struct GammaResult {
  Rational gamma;
  RatVector w;
  RatVector z;
  Rational alpha1;
  Rational alpha2;
};

/// Computes gamma from the two membership residuals. Returns nothing when
/// the first-nonzero indices of the two residuals disagree: the residual of
/// one matrix then vanishes at a balanced pair where the other's does not,
/// so no positive affine transformation can relate the game to a zero-sum
/// one. Throws std::logic_error if either matrix is in the subspace.
std::optional<GammaResult> compute_gamma(const MembershipResult& mem_a,
                                         const MembershipResult& mem_b,
                                         const GameMatrix& a_tilde,
                                         const GameMatrix& b_tilde);

/// D = b_tilde + gamma * a_tilde, exact.
GameMatrix build_d(const GameMatrix& a_tilde, const GameMatrix& b_tilde, const Rational& gamma);

struct EquivalentGame {
  GameMatrix a_hat;
  GameMatrix b_hat;
  RankCase rank_case;
};

/// Rank-2 construction: a_hat = gamma * a_tilde - row_part(D),
/// b_hat = b_tilde - col_part(D). Requires mem_d.in_m.
EquivalentGame equivalent_game_rank2(const GameMatrix& a_tilde, const GameMatrix& b_tilde,
                                     const Rational& gamma, const MembershipResult& mem_d);

/// Constructions for D = 0, constant-column D and constant-row D, tried in
/// that order. Throws std::invalid_argument when D fits none of the three
/// (callers must then route to the rank-2 construction).
EquivalentGame equivalent_game_lowrank(const GameMatrix& a_tilde, const GameMatrix& b_tilde,
                                       const Rational& gamma, const GameMatrix& d);

struct EquivalenceReport {
  Verdict verdict = Verdict::NotEquivalentViaPAT;
  std::optional<Rational> gamma;
  std::optional<GameMatrix> d_matrix;
  std::optional<RankCase> rank_case;
  std::optional<GameMatrix> a_hat;
  std::optional<GameMatrix> b_hat;
  std::optional<Refusal> reason;
  bool strictly_competitive = false;
};

/// The full decision pipeline. Membership of both payoff matrices, the
/// pure-strategy early exit, gamma, D, and the equivalent zero-sum game by
/// rank case. Every failure is a verdict, never an exception, and the total
/// work is O(mn) exact arithmetic operations.
EquivalenceReport classify(const BimatrixGame& game);

/// True iff b_tilde = -alpha * a_tilde + beta * ones for some alpha > 0.
bool is_strictly_competitive(const BimatrixGame& game);

}  // namespace strateq
