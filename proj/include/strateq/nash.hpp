#pragma once

#include <optional>
#include <vector>

#include "strateq/equivalence.hpp"
#include "strateq/matrix.hpp"
#include "strateq/subspace.hpp"

namespace strateq {

/// Mixed strategies for both players plus the row player's expected payoff
/// p^T A q in whichever matrix the profile was solved against. Both p and q
/// are exact probability vectors.
struct MixedProfile {
  RatVector p;
  RatVector q;
  Rational value;
};

enum class SolveStatus { PureNE, ZeroSumNE, NoEquivalenceFound };

const char* to_token(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::NoEquivalenceFound;
  std::optional<MixedProfile> profile;
  EquivalenceReport report;
};

/// Exact Nash check against all pure deviations (which suffice by
/// linearity): p^T A q >= e_i^T A q for every row i and p^T B q >= p^T B e_j
/// for every column j. Throws std::invalid_argument on dimension mismatch
/// or when p, q are not probability vectors.
bool verify_ne(const GameMatrix& a, const GameMatrix& b, const RatVector& p, const RatVector& q);

struct PureNeResult {
  int i = 0;  // 1-based pure strategies
  int j = 0;
  MixedProfile profile;
};

/// Pure equilibrium for games where at least one payoff matrix lies in the
/// subspace M. The in-M matrix makes its owner's payoff independent of the
/// opponent up to a shift, so an argmax of the shift vector (lowest index on
/// ties) plus a best response settles the game. Throws std::invalid_argument
/// when neither membership holds. profile.value is the row player's payoff
/// in the original game.
PureNeResult pure_ne(const BimatrixGame& game, const MembershipResult& mem_a,
                     const MembershipResult& mem_b);

/// Exact minimax solve of the zero-sum game (a_hat, -a_hat): one simplex run
/// on the column player's program, with the row player's strategy recovered
/// from the dual. The result satisfies
///   min_j p^T A e_j = value = max_i e_i^T A q
/// exactly.
MixedProfile solve_zero_sum_lp(const GameMatrix& a_hat);

/// Exhaustive search over support pairs up to max_support per side. For each
/// pair the two indifference-plus-no-better-deviation systems are solved
/// exactly and independently; every returned profile is a Nash equilibrium
/// of (a, b). Intended as a verification oracle for small games; refuses
/// games larger than 8x8.
std::vector<MixedProfile> support_enumeration(const GameMatrix& a, const GameMatrix& b,
                                              int max_support);

/// The end-to-end driver: classify, then route to the pure-strategy solver
/// or the zero-sum LP. The returned profile always verifies on the original
/// game; when the game is not equivalent, the profile is absent rather than
/// a sentinel.
SolveOutcome solve_strat_ne(const BimatrixGame& game);

}  // namespace strateq
