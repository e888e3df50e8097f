#include "strateq/equivalence.hpp"

#include <stdexcept>
#include <utility>

namespace strateq {

namespace {

// All rows equal, i.e. every column of d is a constant vector (d = 1_m u^T).
bool columns_constant(const GameMatrix& d) {
  for (int i = 2; i <= d.rows(); ++i) {
    for (int j = 1; j <= d.cols(); ++j) {
      if (d.at(i, j) != d.at(1, j)) return false;
    }
  }
  return true;
}

// All columns equal, i.e. every row of d is a constant vector (d = v 1_n^T).
bool rows_constant(const GameMatrix& d) {
  for (int i = 1; i <= d.rows(); ++i) {
    for (int j = 2; j <= d.cols(); ++j) {
      if (d.at(i, j) != d.at(i, 1)) return false;
    }
  }
  return true;
}

bool is_constant(const GameMatrix& f) {
  for (int i = 1; i <= f.rows(); ++i) {
    for (int j = 1; j <= f.cols(); ++j) {
      if (f.at(i, j) != f.at(1, 1)) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_token(Verdict v) {
  switch (v) {
    case Verdict::PureStrategyNE: return "pure_strategy_ne";
    case Verdict::StrategicallyZeroSum: return "strategically_zero_sum";
    case Verdict::NotEquivalentViaPAT: return "not_equivalent_via_pat";
  }
  return "?";
}

const char* to_token(Refusal r) {
  switch (r) {
    case Refusal::WitnessIndexMismatch: return "witness_index_mismatch";
    case Refusal::GammaNonPositive: return "gamma_non_positive";
    case Refusal::DNotInM: return "d_not_in_m";
  }
  return "?";
}

const char* to_token(RankCase c) {
  switch (c) {
    case RankCase::Rank0: return "rank0";
    case RankCase::Rank1ColOnes: return "rank1_col_ones";
    case RankCase::Rank1RowOnes: return "rank1_row_ones";
    case RankCase::Rank2: return "rank2";
  }
  return "?";
}

std::optional<GammaResult> compute_gamma(const MembershipResult& mem_a,
                                         const MembershipResult& mem_b,
                                         const GameMatrix& a_tilde,
                                         const GameMatrix& b_tilde) {
  if (mem_a.in_m || mem_b.in_m)
    throw std::logic_error("compute_gamma requires both matrices outside the subspace");
  if (mem_a.l != mem_b.l || mem_a.k != mem_b.k) return std::nullopt;

  GammaResult result;
  result.alpha1 = mem_a.alpha;
  result.alpha2 = mem_b.alpha;
  result.gamma = -(result.alpha2 / result.alpha1);
  result.w.assign(a_tilde.rows(), Rational(0));
  result.z.assign(b_tilde.cols(), Rational(0));
  result.w[mem_a.l - 1] += 1;
  result.w[mem_a.ref_i - 1] -= 1;
  result.z[mem_a.k - 1] += 1;
  result.z[mem_a.ref_j - 1] -= 1;
  return result;
}

GameMatrix build_d(const GameMatrix& a_tilde, const GameMatrix& b_tilde, const Rational& gamma) {
  if (a_tilde.rows() != b_tilde.rows() || a_tilde.cols() != b_tilde.cols())
    throw std::invalid_argument("payoff matrices must share dimensions");
  GameMatrix d(a_tilde.rows(), a_tilde.cols());
  for (int i = 1; i <= a_tilde.rows(); ++i) {
    for (int j = 1; j <= a_tilde.cols(); ++j) {
      d.at(i, j) = b_tilde.at(i, j) + gamma * a_tilde.at(i, j);
    }
  }
  return d;
}

EquivalentGame equivalent_game_rank2(const GameMatrix& a_tilde, const GameMatrix& b_tilde,
                                     const Rational& gamma, const MembershipResult& mem_d) {
  if (!mem_d.in_m)
    throw std::invalid_argument("rank-2 construction requires D inside the subspace");
  GameMatrix a_hat = gamma * a_tilde;
  a_hat -= mem_d.row_part;
  GameMatrix b_hat = b_tilde;
  b_hat -= mem_d.col_part;
  return {std::move(a_hat), std::move(b_hat), RankCase::Rank2};
}

EquivalentGame equivalent_game_lowrank(const GameMatrix& a_tilde, const GameMatrix& b_tilde,
                                       const Rational& gamma, const GameMatrix& d) {
  if (d.is_zero()) return {gamma * a_tilde, b_tilde, RankCase::Rank0};
  if (columns_constant(d)) {
    GameMatrix a_hat = gamma * a_tilde;
    a_hat -= d;
    return {std::move(a_hat), b_tilde, RankCase::Rank1ColOnes};
  }
  if (rows_constant(d)) {
    GameMatrix b_hat = b_tilde;
    b_hat -= d;
    return {gamma * a_tilde, std::move(b_hat), RankCase::Rank1RowOnes};
  }
  throw std::invalid_argument("D fits no low-rank case; use the rank-2 construction");
}

EquivalenceReport classify(const BimatrixGame& game) {
  EquivalenceReport report;
  report.strictly_competitive = is_strictly_competitive(game);

  MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
  MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
  if (mem_a.in_m || mem_b.in_m) {
    report.verdict = Verdict::PureStrategyNE;
    return report;
  }

  std::optional<GammaResult> gamma = compute_gamma(mem_a, mem_b, game.a_tilde, game.b_tilde);
  if (!gamma) {
    report.verdict = Verdict::NotEquivalentViaPAT;
    report.reason = Refusal::WitnessIndexMismatch;
    return report;
  }
  report.gamma = gamma->gamma;
  if (gamma->gamma.sign() <= 0) {
    report.verdict = Verdict::NotEquivalentViaPAT;
    report.reason = Refusal::GammaNonPositive;
    return report;
  }

  GameMatrix d = build_d(game.a_tilde, game.b_tilde, gamma->gamma);
  report.d_matrix = d;

  std::optional<EquivalentGame> equivalent;
  if (d.is_zero() || columns_constant(d) || rows_constant(d)) {
    equivalent = equivalent_game_lowrank(game.a_tilde, game.b_tilde, gamma->gamma, d);
  } else {
    MembershipResult mem_d = is_in_subspace_m(d);
    if (!mem_d.in_m) {
      report.verdict = Verdict::NotEquivalentViaPAT;
      report.reason = Refusal::DNotInM;
      return report;
    }
    equivalent = equivalent_game_rank2(game.a_tilde, game.b_tilde, gamma->gamma, mem_d);
  }

  report.verdict = Verdict::StrategicallyZeroSum;
  report.rank_case = equivalent->rank_case;
  report.a_hat = std::move(equivalent->a_hat);
  report.b_hat = std::move(equivalent->b_hat);
  return report;
}

bool is_strictly_competitive(const BimatrixGame& game) {
  const GameMatrix& a = game.a_tilde;
  const GameMatrix& b = game.b_tilde;

  if (is_constant(a)) return is_constant(b);

  // Find a cell where a differs from a(1,1); that pair forces alpha.
  int di = 0;
  int dj = 0;
  for (int i = 1; i <= a.rows() && di == 0; ++i) {
    for (int j = 1; j <= a.cols(); ++j) {
      if (a.at(i, j) != a.at(1, 1)) {
        di = i;
        dj = j;
        break;
      }
    }
  }
  Rational a_diff = a.at(1, 1) - a.at(di, dj);
  Rational b_diff = b.at(1, 1) - b.at(di, dj);
  Rational alpha = -(b_diff / a_diff);
  if (alpha.sign() <= 0) return false;

  // b + alpha * a must be the constant matrix beta * ones.
  Rational beta = b.at(1, 1) + alpha * a.at(1, 1);
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) {
      if (b.at(i, j) + alpha * a.at(i, j) != beta) return false;
    }
  }
  return true;
}

}  // namespace strateq
