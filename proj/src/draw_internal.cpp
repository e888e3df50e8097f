#include "draw_internal.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace strateq::internal {

long uniform_long(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  for (;;) {
    std::uint64_t draw = rng();
    if (draw < limit) return lo + static_cast<long>(draw % span);
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (a + 1) + 0xBF58476D1CE4E5B9ull * (b + 1) +
                    0x94D049BB133111EBull * (c + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

bool int_in_subspace_m(const IntMatrix& f) {
  return int_first_residual_nonzero(f).l == 0;
}

IntResidualWitness int_first_residual_nonzero(const IntMatrix& f) {
  // Row 1 and column 1 of the residual vanish by construction.
  for (int l = 2; l <= f.m; ++l) {
    for (int k = 2; k <= f.n; ++k) {
      long r = f.at(l, k) - f.at(1, k) - f.at(l, 1) + f.at(1, 1);
      if (r != 0) return {l, k, r};
    }
  }
  return {0, 0, 0};
}

PatDraw draw_pat(int m, int n, std::mt19937_64& rng, long lo, long hi) {
  if (m < 2 || n < 2) throw std::invalid_argument("PAT games need m, n >= 2");
  long magnitude = std::max(std::abs(lo), std::abs(hi));
  if (magnitude < 1) magnitude = 1;

  PatDraw draw;
  draw.kernel = IntMatrix(m, n);
  for (int attempt = 0;; ++attempt) {
    for (auto& e : draw.kernel.e) e = uniform_long(rng, lo, hi);
    if (!int_in_subspace_m(draw.kernel)) break;
    if (attempt >= 100)
      throw std::invalid_argument("value range cannot produce a kernel outside the subspace");
  }

  draw.alpha1 = uniform_long(rng, 1, magnitude);
  draw.alpha2 = uniform_long(rng, 1, magnitude);
  draw.beta1 = uniform_long(rng, -magnitude, magnitude);
  draw.beta2 = uniform_long(rng, -magnitude, magnitude);
  draw.u.resize(n);
  for (auto& e : draw.u) e = uniform_long(rng, lo, hi);
  draw.v.resize(m);
  for (auto& e : draw.v) e = uniform_long(rng, lo, hi);
  return draw;
}

IntGameDraw materialize_pat(const PatDraw& draw) {
  const int m = draw.kernel.m;
  const int n = draw.kernel.n;
  IntGameDraw game;
  game.a = IntMatrix(m, n);
  game.b = IntMatrix(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      game.a.at(i, j) = draw.alpha1 * draw.kernel.at(i, j) + draw.beta1 * draw.u[j - 1];
      game.b.at(i, j) = -draw.alpha2 * draw.kernel.at(i, j) + draw.beta2 * draw.v[i - 1];
    }
  }
  return game;
}

IntGameDraw draw_pure_ne(int m, int n, std::mt19937_64& rng) {
  if (m < 1 || n < 1) throw std::invalid_argument("game sizes must be >= 1");
  bool a_in_m = uniform_long(rng, 0, 1) == 0;

  IntMatrix member(m, n);
  std::vector<long> u(n);
  std::vector<long> v(m);
  for (auto& e : u) e = uniform_long(rng, -50, 50);
  for (auto& e : v) e = uniform_long(rng, -50, 50);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) member.at(i, j) = u[j - 1] + v[i - 1];
  }

  IntMatrix other(m, n);
  for (auto& e : other.e) e = uniform_long(rng, -50, 50);

  IntGameDraw game;
  if (a_in_m) {
    game.a = std::move(member);
    game.b = std::move(other);
  } else {
    game.a = std::move(other);
    game.b = std::move(member);
  }
  return game;
}

NonEquivalentDraw draw_non_equivalent(int m, int n, std::mt19937_64& rng, bool odd_seed) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("every 1-strategy game trivially has a pure equilibrium");
  const bool gamma_negative = !odd_seed || std::min(m, n) < 3;

  if (gamma_negative) {
    NonEquivalentDraw result;
    result.expected_reason = Refusal::GammaNonPositive;
    IntMatrix a(m, n);
    do {
      for (auto& e : a.e) e = uniform_long(rng, -50, 50);
    } while (int_in_subspace_m(a));
    long c = uniform_long(rng, 1, 50);
    std::vector<long> u(n);
    std::vector<long> v(m);
    for (auto& e : u) e = uniform_long(rng, -50, 50);
    for (auto& e : v) e = uniform_long(rng, -50, 50);

    IntMatrix b(m, n);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) b.at(i, j) = c * a.at(i, j) + u[j - 1] + v[i - 1];
    }
    result.game.a = std::move(a);
    result.game.b = std::move(b);
    return result;
  }

  // Break D's membership: perturb one entry of b_tilde strictly after the
  // first residual witness in row-major order. gamma and the witness pair
  // are untouched, and the perturbation survives into the D residual.
  for (;;) {
    PatDraw pat = draw_pat(m, n, rng, -50, 50);
    IntGameDraw game = materialize_pat(pat);
    IntResidualWitness wit = int_first_residual_nonzero(game.b);

    std::vector<std::pair<int, int>> candidates;
    for (int s = 2; s <= m; ++s) {
      for (int t = 2; t <= n; ++t) {
        if ((s - 1) * n + t > (wit.l - 1) * n + wit.k) candidates.emplace_back(s, t);
      }
    }
    if (candidates.empty()) continue;

    auto [s, t] = candidates[uniform_long(rng, 0, static_cast<long>(candidates.size()) - 1)];
    long delta = uniform_long(rng, 1, 9);
    if (uniform_long(rng, 0, 1) == 1) delta = -delta;
    game.b.at(s, t) += delta;
    return {std::move(game), Refusal::DNotInM};
  }
}

BimatrixGame to_exact(const IntGameDraw& draw) {
  GameMatrix a(draw.a.m, draw.a.n);
  GameMatrix b(draw.b.m, draw.b.n);
  for (int i = 1; i <= draw.a.m; ++i) {
    for (int j = 1; j <= draw.a.n; ++j) {
      a.at(i, j) = Rational(draw.a.at(i, j));
      b.at(i, j) = Rational(draw.b.at(i, j));
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace strateq::internal
