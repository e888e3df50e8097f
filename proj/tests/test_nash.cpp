#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "strateq/generators.hpp"
#include "strateq/nash.hpp"
#include "test_support.hpp"

using namespace strateq;
namespace st = strateq::testing;

namespace {

RatVector uniform_profile(int k) { return RatVector(k, Rational(1, k)); }

RatVector pure(int k, int idx) {
  RatVector p(k, Rational(0));
  p[idx - 1] = 1;
  return p;
}

RatVector random_profile(std::mt19937_64& rng, int k) {
  RatVector p(k);
  Rational total;
  for (auto& e : p) {
    e = Rational(st::uniform(rng, 0, 20), 1 + st::uniform(rng, 0, 4));
    total += e;
  }
  if (total.is_zero()) return uniform_profile(k);
  for (auto& e : p) e /= total;
  return p;
}

}  // namespace

TEST_CASE("verify_ne on rock-paper-scissors") {
  GameMatrix a = st::rps_a();
  GameMatrix b = -st::rps_a();
  CHECK(verify_ne(a, b, uniform_profile(3), uniform_profile(3)));
  CHECK_FALSE(verify_ne(a, b, pure(3, 1), uniform_profile(3)));
  CHECK(verify_ne(st::pat_a_tilde(), st::pat_b_tilde(), uniform_profile(3), uniform_profile(3)));
  CHECK_THROWS_AS(verify_ne(a, b, uniform_profile(2), uniform_profile(3)),
                  std::invalid_argument);
  RatVector not_simplex{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  CHECK_THROWS_AS(verify_ne(a, b, not_simplex, uniform_profile(3)), std::invalid_argument);
}

TEST_CASE("pure_ne on the three named cases") {
  SUBCASE("only the row matrix in M") {
    BimatrixGame game{GameMatrix::from_rows({{3, 3}, {1, 1}}),
                      GameMatrix::from_rows({{0, 5}, {9, 9}})};
    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    REQUIRE(mem_a.in_m);
    REQUIRE_FALSE(mem_b.in_m);
    PureNeResult result = pure_ne(game, mem_a, mem_b);
    CHECK(result.i == 1);
    CHECK(result.j == 2);
    CHECK(result.profile.value == Rational(3));
    CHECK(game.b_tilde.at(result.i, result.j) == Rational(5));
    CHECK(verify_ne(game.a_tilde, game.b_tilde, result.profile.p, result.profile.q));
  }

  SUBCASE("all-zero matrices tie-break to (1, 1)") {
    BimatrixGame game{GameMatrix(3, 4), GameMatrix(3, 4)};
    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    PureNeResult result = pure_ne(game, mem_a, mem_b);
    CHECK(result.i == 1);
    CHECK(result.j == 1);
    CHECK(verify_ne(game.a_tilde, game.b_tilde, result.profile.p, result.profile.q));
  }

  SUBCASE("both matrices in M take independent argmaxes") {
    RatVector v1{Rational(0), Rational(7)};
    RatVector u2{Rational(4), Rational(1)};
    GameMatrix a = replicate_col(v1, 2);
    a += replicate_row({Rational(2), Rational(-1)}, 2);
    GameMatrix b = replicate_row(u2, 2);
    b += replicate_col({Rational(-3), Rational(6)}, 2);
    BimatrixGame game{std::move(a), std::move(b)};
    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    REQUIRE(mem_a.in_m);
    REQUIRE(mem_b.in_m);
    PureNeResult result = pure_ne(game, mem_a, mem_b);
    CHECK(result.i == 2);
    CHECK(result.j == 1);
    CHECK(verify_ne(game.a_tilde, game.b_tilde, result.profile.p, result.profile.q));
  }

  SUBCASE("only the column matrix in M") {
    BimatrixGame game{GameMatrix::from_rows({{1, 9}, {4, 2}}),
                      GameMatrix::from_rows({{0, 5}, {3, 8}})};
    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    REQUIRE_FALSE(mem_a.in_m);
    REQUIRE(mem_b.in_m);
    PureNeResult result = pure_ne(game, mem_a, mem_b);
    // u2 = (0, 5) up to shift: column 2 is dominant; row player best-responds.
    CHECK(result.j == 2);
    CHECK(result.i == 1);
    CHECK(verify_ne(game.a_tilde, game.b_tilde, result.profile.p, result.profile.q));
  }

  SUBCASE("neither in M is a caller bug") {
    BimatrixGame game = st::pat_game();
    MembershipResult mem_a = is_in_subspace_m(game.a_tilde);
    MembershipResult mem_b = is_in_subspace_m(game.b_tilde);
    CHECK_THROWS_AS(pure_ne(game, mem_a, mem_b), std::invalid_argument);
  }
}

TEST_CASE("zero-sum LP on the named examples") {
  SUBCASE("the published equivalent game") {
    MixedProfile profile = solve_zero_sum_lp(st::pat_a_hat());
    CHECK(profile.p == uniform_profile(3));
    CHECK(profile.q == uniform_profile(3));
    CHECK(profile.value == Rational(-9));
  }
  SUBCASE("1x1") {
    MixedProfile profile = solve_zero_sum_lp(GameMatrix::from_rows({{1}}));
    CHECK(profile.p == RatVector{Rational(1)});
    CHECK(profile.q == RatVector{Rational(1)});
    CHECK(profile.value == Rational(1));
  }
  SUBCASE("diagonal game") {
    MixedProfile profile = solve_zero_sum_lp(GameMatrix::from_rows({{2, 0}, {0, 2}}));
    CHECK(profile.p == uniform_profile(2));
    CHECK(profile.q == uniform_profile(2));
    CHECK(profile.value == Rational(1));
  }
  SUBCASE("single row") {
    MixedProfile profile = solve_zero_sum_lp(GameMatrix::from_rows({{-3, -7, -5}}));
    CHECK(profile.p == RatVector{Rational(1)});
    CHECK(profile.value == Rational(-7));
    CHECK(profile.q == pure(3, 2));
  }
  SUBCASE("matching pennies") {
    MixedProfile profile = solve_zero_sum_lp(GameMatrix::from_rows({{1, -1}, {-1, 1}}));
    CHECK(profile.p == uniform_profile(2));
    CHECK(profile.q == uniform_profile(2));
    CHECK(profile.value == Rational(0));
  }
}

TEST_CASE("LP certificate holds exactly on random games") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng() % 6);
    int n = 1 + static_cast<int>(rng() % 6);
    GameMatrix a = st::random_rational_matrix(rng, m, n, 8, 5);
    MixedProfile profile = solve_zero_sum_lp(a);

    Rational p_sum, q_sum;
    for (const auto& e : profile.p) {
      CHECK(e.sign() >= 0);
      p_sum += e;
    }
    for (const auto& e : profile.q) {
      CHECK(e.sign() >= 0);
      q_sum += e;
    }
    CHECK(p_sum == Rational(1));
    CHECK(q_sum == Rational(1));

    // Strong-duality sandwich: p guarantees at least `value` against every
    // column, q concedes at most `value` against every row.
    for (int j = 1; j <= n; ++j) {
      Rational col_payoff;
      for (int i = 1; i <= m; ++i) col_payoff += profile.p[i - 1] * a.at(i, j);
      CHECK(col_payoff >= profile.value);
    }
    for (int i = 1; i <= m; ++i) {
      Rational row_payoff;
      for (int j = 1; j <= n; ++j) row_payoff += a.at(i, j) * profile.q[j - 1];
      CHECK(row_payoff <= profile.value);
    }
    CHECK(verify_ne(a, -a, profile.p, profile.q));
  }
}

TEST_CASE("support enumeration on the named examples") {
  SUBCASE("rock-paper-scissors has exactly one equilibrium") {
    auto found = support_enumeration(st::rps_a(), -st::rps_a(), 3);
    REQUIRE(found.size() == 1);
    CHECK(found[0].p == uniform_profile(3));
    CHECK(found[0].q == uniform_profile(3));
    CHECK(found[0].value == Rational(0));
  }
  SUBCASE("pure-equilibrium game includes (e1, e2)") {
    auto found = support_enumeration(GameMatrix::from_rows({{3, 3}, {1, 1}}),
                                     GameMatrix::from_rows({{0, 5}, {9, 9}}), 2);
    bool has = false;
    for (const auto& profile : found) {
      if (profile.p == pure(2, 1) && profile.q == pure(2, 2)) has = true;
    }
    CHECK(has);
  }
  SUBCASE("matching pennies") {
    GameMatrix a = GameMatrix::from_rows({{1, -1}, {-1, 1}});
    auto found = support_enumeration(a, -a, 2);
    REQUIRE(found.size() == 1);
    CHECK(found[0].p == uniform_profile(2));
    CHECK(found[0].q == uniform_profile(2));
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(support_enumeration(GameMatrix(9, 2), GameMatrix(9, 2), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(support_enumeration(GameMatrix(2, 2), GameMatrix(2, 2), 5),
                    std::invalid_argument);
  }
}

TEST_CASE("support enumeration agrees with the LP on zero-sum games") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    GameMatrix a = st::random_int_matrix(rng, m, n, -5, 5);
    MixedProfile lp = solve_zero_sum_lp(a);
    auto found = support_enumeration(a, -a, std::min(m, n));
    CHECK(!found.empty());
    for (const auto& profile : found) {
      CHECK(profile.value == lp.value);  // zero-sum games have a unique value
    }
  }
}

TEST_CASE("a verified equilibrium beats random mixed deviations") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 15; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    GameMatrix a = st::random_int_matrix(rng, m, n, -5, 5);
    GameMatrix b = st::random_int_matrix(rng, m, n, -5, 5);
    auto found = support_enumeration(a, b, std::min(m, n));
    REQUIRE(!found.empty());
    const MixedProfile& eq = found.front();
    REQUIRE(verify_ne(a, b, eq.p, eq.q));

    Rational row_payoff = st::bilinear_oracle(eq.p, a, eq.q);
    Rational col_payoff = st::bilinear_oracle(eq.p, b, eq.q);
    for (int dev = 0; dev < 20; ++dev) {
      CHECK(st::bilinear_oracle(random_profile(rng, m), a, eq.q) <= row_payoff);
      CHECK(st::bilinear_oracle(eq.p, b, random_profile(rng, n)) <= col_payoff);
    }
  }
}

TEST_CASE("solve_strat_ne routes all three outcomes") {
  SUBCASE("the worked example solves to the uniform profile") {
    SolveOutcome outcome = solve_strat_ne(st::pat_game());
    CHECK(outcome.status == SolveStatus::ZeroSumNE);
    REQUIRE(outcome.profile.has_value());
    CHECK(outcome.profile->p == uniform_profile(3));
    CHECK(outcome.profile->q == uniform_profile(3));
    CHECK(outcome.profile->value == Rational(-9));
    CHECK(verify_ne(st::pat_a_tilde(), st::pat_b_tilde(), outcome.profile->p,
                    outcome.profile->q));
  }
  SUBCASE("pure branch") {
    BimatrixGame game{GameMatrix::from_rows({{3, 3}, {1, 1}}),
                      GameMatrix::from_rows({{0, 5}, {9, 9}})};
    SolveOutcome outcome = solve_strat_ne(game);
    CHECK(outcome.status == SolveStatus::PureNE);
    REQUIRE(outcome.profile.has_value());
    CHECK(outcome.profile->p == pure(2, 1));
    CHECK(outcome.profile->q == pure(2, 2));
  }
  SUBCASE("no equivalence leaves the profile absent") {
    GameMatrix b = st::pat_b_tilde();
    b.at(3, 3) = Rational(11);
    SolveOutcome outcome = solve_strat_ne({st::pat_a_tilde(), b});
    CHECK(outcome.status == SolveStatus::NoEquivalenceFound);
    CHECK_FALSE(outcome.profile.has_value());
    CHECK(outcome.report.reason == Refusal::DNotInM);
  }
}

TEST_CASE("generated PAT games solve and verify on the original payoffs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto [game, truth] = gen_pat_zero_sum(2 + seed % 7, 2 + (3 * seed) % 7, seed);
    SolveOutcome outcome = solve_strat_ne(game);
    CHECK(outcome.status == SolveStatus::ZeroSumNE);
    REQUIRE(outcome.profile.has_value());
    CHECK(verify_ne(game.a_tilde, game.b_tilde, outcome.profile->p, outcome.profile->q));
  }
}
