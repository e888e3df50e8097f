#pragma once

#include <optional>
#include <vector>

#include "strateq/matrix.hpp"

namespace strateq {

// The subspace M_{m x n} of matrices of the form 1_m u^T + v 1_n^T.
// A game matrix in this subspace gives its owner a payoff that depends on
// the opponent's strategy only up to an additive shift, which is what makes
// the membership test the workhorse of the whole classification pipeline.

/// F split against reference row i and column j:
///   row_part = 1_m F_(i),  col_part = (F^(j) - 1_m f_ij) 1_n^T,
///   f_hat    = F - row_part - col_part.
/// Row i and column j of f_hat are zero by construction, and F lies in M
/// iff f_hat is the zero matrix.
struct ResidualParts {
  GameMatrix f_hat;
  GameMatrix row_part;
  GameMatrix col_part;
};

ResidualParts residual(const GameMatrix& f, int i, int j);

/// Outcome of the membership test with the fixed reference (i, j) = (1, 1).
///
/// When in_m holds, f = row_part + col_part exactly and (l, k) is set to
/// (m, n) with alpha = 0. Otherwise (l, k) is the first nonzero entry of the
/// residual in row-major order and alpha is its value.
struct MembershipResult {
  bool in_m = false;
  Rational alpha;
  int l = 0;
  int k = 0;
  GameMatrix row_part;
  GameMatrix col_part;
  int ref_i = 1;
  int ref_j = 1;
};

MembershipResult is_in_subspace_m(const GameMatrix& f);

/// A certificate that F is outside M: balanced vectors (1^T w = 0,
/// 1^T z = 0) with w^T F z = value != 0.
struct WzWitness {
  RatVector w;
  RatVector z;
  Rational value;
};

/// Returns a witness built from the first nonzero residual entry
/// (w = e_l - e_1, z = e_k - e_1), or nothing when f lies in M.
std::optional<WzWitness> witness_wz(const GameMatrix& f);

/// One rank-reduction step: C - (y^T C x)^{-1} (C x)(y^T C). The result has
/// rank exactly one less than C. Throws std::domain_error when y^T C x = 0,
/// since the rank would not drop.
GameMatrix wedderburn_step(const GameMatrix& c, const RatVector& x, const RatVector& y);

/// Splits C into exactly matrix_rank(C) rank-1 terms whose sum reproduces C.
/// Each step pivots on the first nonzero entry in row-major order, so the
/// decomposition is deterministic. Returns an empty list for the zero matrix.
std::vector<GameMatrix> wedderburn_decompose(GameMatrix c);

}  // namespace strateq
