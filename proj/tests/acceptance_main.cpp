// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances and time budgets in
// code; everything numeric is exact unless the criterion says otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strateq/bench.hpp"
#include "strateq/game_io.hpp"
#include "strateq/generators.hpp"
#include "strateq/nash.hpp"
#include "strateq/subspace.hpp"
#include "test_support.hpp"

using namespace strateq;
namespace st = strateq::testing;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    if (ok) detail = message;
    ok = false;
  }
  void require(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

RatVector uniform_profile(int k) { return RatVector(k, Rational(1, k)); }

// 1. The worked 3x3 example: gamma, the equivalent zero-sum game, and its
//    exact uniform equilibrium of value -9, all inside one second.
Check golden_example() {
  Check check;
  auto start = clock_type::now();

  EquivalenceReport report = classify(st::pat_game());
  check.require(report.verdict == Verdict::StrategicallyZeroSum, "wrong verdict");
  check.require(report.gamma && *report.gamma == Rational(2), "gamma != 2");
  check.require(report.a_hat && *report.a_hat == st::pat_a_hat(), "a_hat mismatch");
  check.require(report.b_hat && *report.b_hat == -st::pat_a_hat(), "b_hat mismatch");

  SolveOutcome outcome = solve_strat_ne(st::pat_game());
  check.require(outcome.status == SolveStatus::ZeroSumNE, "solve status");
  check.require(outcome.profile && outcome.profile->p == uniform_profile(3) &&
                    outcome.profile->q == uniform_profile(3),
                "profile is not uniform");
  check.require(outcome.profile && outcome.profile->value == Rational(-9), "value != -9");

  double elapsed = seconds_since(start);
  check.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s (budget 1 s)");
  return check;
}

// 2. 200 generated PAT games with 2 <= m, n <= 20: classified equivalent,
//    gamma recovered exactly, a_hat + b_hat = 0, and the LP equilibrium
//    verifies on the original game. Budget 60 s.
Check pat_round_trip() {
  Check check;
  auto start = clock_type::now();
  std::mt19937_64 size_rng(20240401);

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int m = 2 + static_cast<int>(size_rng() % 19);
    int n = 2 + static_cast<int>(size_rng() % 19);
    auto [game, truth] = gen_pat_zero_sum(m, n, seed);

    EquivalenceReport report = classify(game);
    check.require(report.verdict == Verdict::StrategicallyZeroSum,
                  "seed " + std::to_string(seed) + ": not classified equivalent");
    if (report.verdict != Verdict::StrategicallyZeroSum) break;
    check.require(*report.gamma == truth.expected_gamma,
                  "seed " + std::to_string(seed) + ": gamma mismatch");
    check.require((*report.a_hat + *report.b_hat).is_zero(),
                  "seed " + std::to_string(seed) + ": a_hat + b_hat != 0");

    MixedProfile profile = solve_zero_sum_lp(*report.a_hat);
    check.require(verify_ne(game.a_tilde, game.b_tilde, profile.p, profile.q),
                  "seed " + std::to_string(seed) + ": profile fails on the original game");
    if (!check.ok) break;
  }

  double elapsed = seconds_since(start);
  check.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s (budget 60 s)");
  return check;
}

// 3. 200 non-equivalent games carry the constructed refusal reason, and the
//    small ones still have an equilibrium by Nash's theorem. Budget 120 s.
Check negative_family() {
  Check check;
  auto start = clock_type::now();
  std::mt19937_64 size_rng(20240402);

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int m = 3 + static_cast<int>(size_rng() % 4);
    int n = 3 + static_cast<int>(size_rng() % 4);
    BimatrixGame game = gen_non_equivalent(m, n, seed);

    EquivalenceReport report = classify(game);
    check.require(report.verdict == Verdict::NotEquivalentViaPAT,
                  "seed " + std::to_string(seed) + ": unexpectedly equivalent");
    if (!report.reason) {
      check.fail("seed " + std::to_string(seed) + ": missing reason");
      break;
    }
    Refusal expected = (seed % 2 == 0) ? Refusal::GammaNonPositive : Refusal::DNotInM;
    check.require(*report.reason == expected,
                  "seed " + std::to_string(seed) + ": wrong refusal reason");

    if (m <= 4 && n <= 4) {
      auto equilibria = support_enumeration(game.a_tilde, game.b_tilde, std::min(m, n));
      check.require(!equilibria.empty(),
                    "seed " + std::to_string(seed) + ": oracle found no equilibrium");
    }
    if (!check.ok) break;
  }

  double elapsed = seconds_since(start);
  check.require(elapsed < 120.0, "took " + std::to_string(elapsed) + " s (budget 120 s)");
  return check;
}

// 4. Membership test vs the brute-force four-index characterization on more
//    than 1000 matrices up to 6x6.
Check membership_oracle_agreement() {
  Check check;
  std::mt19937_64 rng(20240403);
  int tested = 0;

  auto compare = [&](const GameMatrix& f) {
    ++tested;
    bool fast = is_in_subspace_m(f).in_m;
    bool oracle = st::membership_oracle(f);
    if (fast != oracle) {
      std::ostringstream msg;
      msg << "disagreement on a " << f.rows() << "x" << f.cols() << " matrix (fast=" << fast
          << ", oracle=" << oracle << ")";
      check.fail(msg.str());
    }
  };

  for (int trial = 0; trial < 500 && check.ok; ++trial) {
    int m = 1 + static_cast<int>(rng() % 6);
    int n = 1 + static_cast<int>(rng() % 6);
    compare(st::random_int_matrix(rng, m, n, -3, 3));
  }
  for (int trial = 0; trial < 300 && check.ok; ++trial) {
    int m = 1 + static_cast<int>(rng() % 6);
    int n = 1 + static_cast<int>(rng() % 6);
    GameMatrix f = replicate_row(st::random_rational_vector(rng, n), m);
    f += replicate_col(st::random_rational_vector(rng, m), n);
    compare(f);
  }
  for (int trial = 0; trial < 300 && check.ok; ++trial) {
    int m = 2 + static_cast<int>(rng() % 5);
    int n = 2 + static_cast<int>(rng() % 5);
    GameMatrix f = replicate_row(st::random_rational_vector(rng, n), m);
    f += replicate_col(st::random_rational_vector(rng, m), n);
    f.at(1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)) +=
        Rational(1 + static_cast<long>(rng() % 7));
    compare(f);
  }

  check.require(tested >= 1000, "fewer than 1000 matrices tested");
  return check;
}

// 5. Wedderburn suite: every term drops the rank by exactly one and the
//    terms sum back to the input, on random matrices up to 10x10 of rank <= 5.
Check wedderburn_suite() {
  Check check;
  std::mt19937_64 rng(20240404);

  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    int m = 2 + static_cast<int>(rng() % 9);
    int n = 2 + static_cast<int>(rng() % 9);
    int terms_drawn = 1 + static_cast<int>(rng() % 5);
    GameMatrix c(m, n);
    for (int t = 0; t < terms_drawn; ++t) {
      RatVector u = st::random_rational_vector(rng, n, 4, 3);
      RatVector v = st::random_rational_vector(rng, m, 4, 3);
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) c.at(i, j) += v[i - 1] * u[j - 1];
      }
    }

    int rank = matrix_rank(c);
    auto terms = wedderburn_decompose(c);
    check.require(static_cast<int>(terms.size()) == rank, "term count != rank");

    GameMatrix remaining = c;
    int expected_rank = rank;
    for (const auto& term : terms) {
      check.require(matrix_rank(term) == 1, "non-rank-1 term");
      remaining -= term;
      --expected_rank;
      check.require(matrix_rank(remaining) == expected_rank, "rank did not drop by exactly 1");
    }
    check.require(remaining.is_zero(), "terms do not sum to the input");
  }
  return check;
}

// 6. 100 pure-strategy-family games classify as such and the returned pure
//    profile is an exact equilibrium.
Check pure_strategy_branch() {
  Check check;
  std::mt19937_64 size_rng(20240405);

  for (std::uint64_t seed = 1; seed <= 100 && check.ok; ++seed) {
    int m = 1 + static_cast<int>(size_rng() % 10);
    int n = 1 + static_cast<int>(size_rng() % 10);
    BimatrixGame game = gen_pure_ne(m, n, seed);

    EquivalenceReport report = classify(game);
    check.require(report.verdict == Verdict::PureStrategyNE,
                  "seed " + std::to_string(seed) + ": wrong verdict");

    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    PureNeResult pure = pure_ne(game, mem_a, mem_b);
    check.require(verify_ne(game.a_tilde, game.b_tilde, pure.profile.p, pure.profile.q),
                  "seed " + std::to_string(seed) + ": pure profile fails verification");
  }
  return check;
}

// 7. Strict competitiveness: b = -3a + 5*ones is always flagged, the worked
//    example never is.
Check strictly_competitive_detection() {
  Check check;
  std::mt19937_64 rng(20240406);

  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    int n = 2 + static_cast<int>(rng() % 7);
    GameMatrix a = st::random_int_matrix(rng, m, n, -30, 30);
    GameMatrix b(m, n);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) b.at(i, j) = Rational(-3) * a.at(i, j) + Rational(5);
    }
    check.require(is_strictly_competitive({a, b}), "constructed instance not flagged");
  }
  check.require(!is_strictly_competitive(st::pat_game()),
                "the worked example is not strictly competitive");
  return check;
}

// 8. Linear-scaling shape, float mode: classification time should roughly
//    quadruple per doubling of n. The checked quantity is the median
//    per-doubling ratio of the per-size median times, which keeps one
//    hardware cache boundary from masking the shape. Budget 5 minutes.
Check linear_scaling_shape() {
  Check check;
  auto start = clock_type::now();

  const std::vector<std::pair<int, int>> sizes{{256, 256}, {512, 512}, {1024, 1024}, {2048, 2048}};
  auto records = bench_run(sizes, 5, {Family::Equivalent}, 20240407, ArithmeticMode::Float);

  std::vector<double> medians;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    std::vector<double> times;
    for (const auto& record : records) {
      if (record.m == sizes[si].first) {
        times.push_back(record.wall_time_s);
        if (record.verdict != Verdict::StrategicallyZeroSum)
          check.fail("bench instance not classified equivalent");
      }
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[times.size() / 2]);
  }

  std::vector<double> ratios;
  std::ostringstream detail;
  detail << "per-doubling ratios";
  for (std::size_t i = 0; i + 1 < medians.size(); ++i) {
    ratios.push_back(medians[i + 1] / medians[i]);
    detail << " " << ratios.back();
  }
  std::sort(ratios.begin(), ratios.end());
  double median_ratio = ratios[ratios.size() / 2];
  detail << ", median " << median_ratio;
  check.detail = detail.str();
  if (median_ratio < 3.0 || median_ratio > 6.0) {
    std::ostringstream msg;
    msg << "median per-doubling ratio " << median_ratio << " outside [3, 6] (medians";
    for (double t : medians) msg << " " << t;
    msg << ")";
    check.fail(msg.str());
  }

  double elapsed = seconds_since(start);
  check.require(elapsed < 300.0, "took " + std::to_string(elapsed) + " s (budget 300 s)");
  return check;
}

// 9. In dimension 2 the balanced witness annihilates D, so DNotInM can never
//    be the refusal reason.
Check two_by_two_completeness() {
  Check check;
  std::mt19937_64 rng(20240408);

  for (int trial = 0; trial < 500 && check.ok; ++trial) {
    GameMatrix a = st::random_int_matrix(rng, 2, 2, -8, 8);
    GameMatrix b = st::random_int_matrix(rng, 2, 2, -8, 8);
    EquivalenceReport report = classify({a, b});
    if (report.reason && *report.reason == Refusal::DNotInM)
      check.fail("2x2 game refused with DNotInM");
  }
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"golden example: classify and solve the worked 3x3 game", golden_example},
      {"PAT round trip on 200 generated games (2..20)", pat_round_trip},
      {"negative family: 200 certified non-equivalent games", negative_family},
      {"membership agrees with the four-index oracle (1000+ matrices)",
       membership_oracle_agreement},
      {"wedderburn rank reduction and reconstruction", wedderburn_suite},
      {"pure-strategy branch on 100 generated games", pure_strategy_branch},
      {"strictly-competitive detection", strictly_competitive_detection},
      {"linear-scaling shape in float mode (256..2048)", linear_scaling_shape},
      {"2x2 games never refuse with DNotInM (500 games)", two_by_two_completeness},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = clock_type::now();
    Check check = criteria[i].run();
    double elapsed = seconds_since(start);
    std::printf("%s  %zu. %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, elapsed, check.detail.empty() ? "" : " -- ",
                check.detail.c_str());
    if (!check.ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
