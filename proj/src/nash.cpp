#include "strateq/nash.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "strateq/lp.hpp"

namespace strateq {

namespace {

void check_distribution(const RatVector& p, int expected_size, const char* name) {
  if (static_cast<int>(p.size()) != expected_size)
    throw std::invalid_argument(std::string(name) + ": wrong length");
  Rational sum;
  for (const auto& v : p) {
    if (v.sign() < 0) throw std::invalid_argument(std::string(name) + ": negative entry");
    sum += v;
  }
  if (sum != Rational(1)) throw std::invalid_argument(std::string(name) + ": does not sum to 1");
}

RatVector matrix_times(const GameMatrix& f, const RatVector& q) {
  RatVector out(f.rows(), Rational(0));
  for (int i = 1; i <= f.rows(); ++i) {
    Rational sum;
    auto row = f.row(i);
    for (int j = 0; j < f.cols(); ++j) {
      if (!q[j].is_zero()) sum += row[j] * q[j];
    }
    out[i - 1] = sum;
  }
  return out;
}

RatVector times_matrix(const RatVector& p, const GameMatrix& f) {
  RatVector out(f.cols(), Rational(0));
  for (int i = 1; i <= f.rows(); ++i) {
    if (p[i - 1].is_zero()) continue;
    auto row = f.row(i);
    for (int j = 0; j < f.cols(); ++j) out[j] += p[i - 1] * row[j];
  }
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

int argmax_lowest(const RatVector& v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best + 1;  // 1-based
}

RatVector unit_vector(int size, int index /* 1-based */) {
  RatVector e(size, Rational(0));
  e[index - 1] = 1;
  return e;
}

// Feasible y restricted to the columns in `support` of payoff matrix g
// (r x c) such that (g y)_i is equal for all i in `tight` and no larger for
// every other row. Returns the full-length strategy vector.
std::optional<RatVector> side_solution(const GameMatrix& g, const std::vector<int>& tight,
                                       const std::vector<int>& support) {
  const int nv = static_cast<int>(support.size());
  const int i0 = tight.front();

  std::vector<RatVector> eq_rows;
  RatVector eq_rhs;
  eq_rows.emplace_back(nv, Rational(1));  // probabilities sum to one
  eq_rhs.emplace_back(1);
  for (std::size_t s = 1; s < tight.size(); ++s) {
    RatVector row(nv);
    for (int t = 0; t < nv; ++t) row[t] = g.at(tight[s], support[t]) - g.at(i0, support[t]);
    eq_rows.push_back(std::move(row));
    eq_rhs.emplace_back(0);
  }

  std::vector<RatVector> le_rows;
  RatVector le_rhs;
  std::vector<bool> is_tight(g.rows() + 1, false);
  for (int i : tight) is_tight[i] = true;
  for (int i = 1; i <= g.rows(); ++i) {
    if (is_tight[i]) continue;
    RatVector row(nv);
    for (int t = 0; t < nv; ++t) row[t] = g.at(i, support[t]) - g.at(i0, support[t]);
    le_rows.push_back(std::move(row));
    le_rhs.emplace_back(0);
  }

  auto y = find_feasible_point(eq_rows, eq_rhs, le_rows, le_rhs, nv);
  if (!y) return std::nullopt;
  RatVector full(g.cols(), Rational(0));
  for (int t = 0; t < nv; ++t) full[support[t] - 1] = (*y)[t];
  return full;
}

GameMatrix transposed(const GameMatrix& f) {
  GameMatrix t(f.cols(), f.rows());
  for (int i = 1; i <= f.rows(); ++i) {
    for (int j = 1; j <= f.cols(); ++j) t.at(j, i) = f.at(i, j);
  }
  return t;
}

std::vector<std::vector<int>> supports_up_to(int n, int max_size) {
  std::vector<std::vector<int>> result;
  for (int size = 1; size <= max_size; ++size) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(i + 1);
      }
      result.push_back(std::move(s));
    }
  }
  return result;
}

}  // namespace

const char* to_token(SolveStatus s) {
  switch (s) {
    case SolveStatus::PureNE: return "pure_ne";
    case SolveStatus::ZeroSumNE: return "zero_sum_ne";
    case SolveStatus::NoEquivalenceFound: return "no_equivalence_found";
  }
  return "?";
}

bool verify_ne(const GameMatrix& a, const GameMatrix& b, const RatVector& p, const RatVector& q) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("payoff matrices must share dimensions");
  check_distribution(p, a.rows(), "p");
  check_distribution(q, a.cols(), "q");

  RatVector aq = matrix_times(a, q);
  Rational row_payoff = dot(p, aq);
  for (const auto& deviation : aq) {
    if (deviation > row_payoff) return false;
  }

  RatVector pb = times_matrix(p, b);
  Rational col_payoff = dot(pb, q);
  for (const auto& deviation : pb) {
    if (deviation > col_payoff) return false;
  }
  return true;
}

PureNeResult pure_ne(const BimatrixGame& game, const MembershipResult& mem_a,
                     const MembershipResult& mem_b) {
  if (!mem_a.in_m && !mem_b.in_m)
    throw std::invalid_argument("pure_ne requires a payoff matrix inside the subspace");
  const int m = game.rows();
  const int n = game.cols();

  int i = 0;
  int j = 0;
  if (mem_a.in_m) {
    // a_tilde = row_part + col_part; the column part's generating vector is
    // the row player's payoff up to a shift shared by all rows.
    RatVector v(m);
    for (int s = 1; s <= m; ++s) v[s - 1] = mem_a.col_part.at(s, 1);
    i = argmax_lowest(v);
    if (mem_b.in_m) {
      RatVector u(n);
      for (int t = 1; t <= n; ++t) u[t - 1] = mem_b.row_part.at(1, t);
      j = argmax_lowest(u);
    } else {
      RatVector row_i(game.b_tilde.row(i).begin(), game.b_tilde.row(i).end());
      j = argmax_lowest(row_i);
    }
  } else {
    RatVector u(n);
    for (int t = 1; t <= n; ++t) u[t - 1] = mem_b.row_part.at(1, t);
    j = argmax_lowest(u);
    RatVector col_j(m);
    for (int s = 1; s <= m; ++s) col_j[s - 1] = game.a_tilde.at(s, j);
    i = argmax_lowest(col_j);
  }

  MixedProfile profile{unit_vector(m, i), unit_vector(n, j), game.a_tilde.at(i, j)};
  return {i, j, std::move(profile)};
}

MixedProfile solve_zero_sum_lp(const GameMatrix& a_hat) {
  const int m = a_hat.rows();
  const int n = a_hat.cols();

  // Shift so every payoff is >= 1; the game value is then positive and the
  // standard reciprocal change of variables applies.
  Rational min_entry = a_hat.at(1, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) min_entry = std::min(min_entry, a_hat.at(i, j));
  }
  Rational shift = min_entry.sign() <= 0 ? Rational(1) - min_entry : Rational(0);

  std::vector<RatVector> rows(m, RatVector(n));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) rows[i - 1][j - 1] = a_hat.at(i, j) + shift;
  }
  SimplexResult lp = simplex_max(rows, RatVector(m, Rational(1)), RatVector(n, Rational(1)));

  // Column player's program: max 1^T y s.t. (A + shift) y <= 1. The optimum
  // is the reciprocal of the shifted game value; the dual recovers p.
  Rational value = lp.objective.inverse();
  MixedProfile profile;
  profile.q.resize(n);
  for (int j = 0; j < n; ++j) profile.q[j] = lp.x[j] * value;
  profile.p.resize(m);
  for (int i = 0; i < m; ++i) profile.p[i] = lp.dual[i] * value;
  profile.value = value - shift;
  return profile;
}

std::vector<MixedProfile> support_enumeration(const GameMatrix& a, const GameMatrix& b,
                                              int max_support) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("payoff matrices must share dimensions");
  const int m = a.rows();
  const int n = a.cols();
  if (m > 8 || n > 8)
    throw std::invalid_argument("support enumeration refuses games larger than 8x8");
  if (max_support < 1 || max_support > std::min(m, n))
    throw std::invalid_argument("max_support must be in [1, min(m, n)]");

  GameMatrix bt = transposed(b);
  std::vector<MixedProfile> found;
  for (const auto& s1 : supports_up_to(m, max_support)) {
    for (const auto& s2 : supports_up_to(n, max_support)) {
      auto q = side_solution(a, s1, s2);
      if (!q) continue;
      auto p = side_solution(bt, s2, s1);
      if (!p) continue;
      if (!verify_ne(a, b, *p, *q)) continue;

      MixedProfile profile{std::move(*p), std::move(*q), Rational(0)};
      profile.value = dot(profile.p, matrix_times(a, profile.q));
      bool duplicate = false;
      for (const auto& prior : found) {
        if (prior.p == profile.p && prior.q == profile.q) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(std::move(profile));
    }
  }
  return found;
}

SolveOutcome solve_strat_ne(const BimatrixGame& game) {
  SolveOutcome outcome;
  outcome.report = classify(game);

  switch (outcome.report.verdict) {
    case Verdict::PureStrategyNE: {
      MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
      MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
      outcome.status = SolveStatus::PureNE;
      outcome.profile = pure_ne(game, mem_a, mem_b).profile;
      break;
    }
    case Verdict::StrategicallyZeroSum:
      outcome.status = SolveStatus::ZeroSumNE;
      outcome.profile = solve_zero_sum_lp(*outcome.report.a_hat);
      break;
    case Verdict::NotEquivalentViaPAT:
      outcome.status = SolveStatus::NoEquivalenceFound;
      break;
  }

  if (outcome.profile &&
      !verify_ne(game.a_tilde, game.b_tilde, outcome.profile->p, outcome.profile->q))
    throw std::logic_error("solver produced a profile that fails the Nash check");
  return outcome;
}

}  // namespace strateq
