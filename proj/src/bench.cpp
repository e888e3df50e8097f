#include "strateq/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "draw_internal.hpp"

namespace strateq {

namespace {

struct FloatMembership {
  bool in_m = true;
  int l = 0;
  int k = 0;
  double alpha = 0.0;
};

// First residual entry above eps in row-major order; row 1 and column 1 of
// the residual are identically zero and skipped.
FloatMembership float_membership(const std::vector<double>& f, int m, int n, double eps) {
  for (int l = 1; l < m; ++l) {
    const double* row = f.data() + static_cast<std::size_t>(l) * n;
    for (int k = 1; k < n; ++k) {
      double r = row[k] - f[k] - row[0] + f[0];
      if (std::abs(r) > eps) return {false, l + 1, k + 1, r};
    }
  }
  return {true, m, n, 0.0};
}

FloatGame materialize_float(const internal::IntGameDraw& draw) {
  FloatGame game;
  game.m = draw.a.m;
  game.n = draw.a.n;
  game.a.assign(draw.a.e.begin(), draw.a.e.end());
  game.b.assign(draw.b.e.begin(), draw.b.e.end());
  return game;
}

internal::IntGameDraw draw_for_family(Family family, int m, int n, std::mt19937_64& rng,
                                      bool odd_seed) {
  switch (family) {
    case Family::Equivalent:
      return internal::materialize_pat(internal::draw_pat(m, n, rng, -50, 50));
    case Family::PureNe:
      return internal::draw_pure_ne(m, n, rng);
    case Family::NonEquivalent:
      return internal::draw_non_equivalent(m, n, rng, odd_seed).game;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

const char* to_token(Family f) {
  switch (f) {
    case Family::Equivalent: return "equivalent";
    case Family::PureNe: return "pure_ne";
    case Family::NonEquivalent: return "non_equivalent";
  }
  return "?";
}

const char* to_token(ArithmeticMode m) {
  return m == ArithmeticMode::Exact ? "exact" : "float";
}

FloatGame to_float(const BimatrixGame& game) {
  FloatGame out;
  out.m = game.rows();
  out.n = game.cols();
  out.a.reserve(static_cast<std::size_t>(out.m) * out.n);
  out.b.reserve(static_cast<std::size_t>(out.m) * out.n);
  for (int i = 1; i <= out.m; ++i) {
    for (int j = 1; j <= out.n; ++j) {
      out.a.push_back(game.a_tilde.at(i, j).to_double());
      out.b.push_back(game.b_tilde.at(i, j).to_double());
    }
  }
  return out;
}

FloatReport float_classify(const FloatGame& game, double eps, FloatWorkspace* workspace) {
  const int m = game.m;
  const int n = game.n;
  const std::size_t total = static_cast<std::size_t>(m) * n;
  FloatReport report;
  FloatWorkspace local;
  FloatWorkspace& buffers = workspace ? *workspace : local;

  FloatMembership mem_a = float_membership(game.a, m, n, eps);
  FloatMembership mem_b = float_membership(game.b, m, n, eps);
  if (mem_a.in_m || mem_b.in_m) {
    report.verdict = Verdict::PureStrategyNE;
    return report;
  }
  if (mem_a.l != mem_b.l || mem_a.k != mem_b.k) {
    report.verdict = Verdict::NotEquivalentViaPAT;
    report.reason = Refusal::WitnessIndexMismatch;
    return report;
  }
  const double gamma = -mem_b.alpha / mem_a.alpha;
  report.gamma = gamma;
  if (gamma <= 0.0) {
    report.verdict = Verdict::NotEquivalentViaPAT;
    report.reason = Refusal::GammaNonPositive;
    return report;
  }

  // One pass over D's entries, computed on the fly as b + gamma * a. The
  // equivalent game only ever needs D's first row and first column, so the
  // full matrix is never stored. The pass evaluates, in the same row-major
  // order as the exact path, whether D is zero, has constant columns, has
  // constant rows, and whether its residual vanishes.
  std::vector<double>& d_row = buffers.d_row;
  std::vector<double>& d_col = buffers.d_col;
  d_row.resize(n);
  d_col.resize(m);
  bool d_zero = true;
  bool col_const = true;
  bool row_const = true;
  bool d_in_m = true;
  for (int i = 0; i < m; ++i) {
    const double* a_row = game.a.data() + static_cast<std::size_t>(i) * n;
    const double* b_row = game.b.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double value = b_row[j] + gamma * a_row[j];
      if (i == 0) d_row[j] = value;
      if (j == 0) d_col[i] = value;
      if (d_zero && std::abs(value) > eps) d_zero = false;
      if (col_const && std::abs(value - d_row[j]) > eps) col_const = false;
      if (row_const && std::abs(value - d_col[i]) > eps) row_const = false;
      if (d_in_m && i > 0 && j > 0 &&
          std::abs(value - d_row[j] - d_col[i] + d_row[0]) > eps)
        d_in_m = false;
    }
    if (!d_zero && !col_const && !row_const && !d_in_m) break;
  }

  RankCase rank_case;
  if (d_zero) {
    rank_case = RankCase::Rank0;
  } else if (col_const) {
    rank_case = RankCase::Rank1ColOnes;
  } else if (row_const) {
    rank_case = RankCase::Rank1RowOnes;
  } else if (d_in_m) {
    rank_case = RankCase::Rank2;
  } else {
    report.verdict = Verdict::NotEquivalentViaPAT;
    report.reason = Refusal::DNotInM;
    return report;
  }

  report.rank_case = rank_case;
  buffers.a_hat.resize(total);
  buffers.b_hat.resize(total);
  for (int i = 0; i < m; ++i) {
    const std::size_t row_start = static_cast<std::size_t>(i) * n;
    const double* a_row = game.a.data() + row_start;
    const double* b_row = game.b.data() + row_start;
    const double row_shift = d_col[i] - d_row[0];
    for (int j = 0; j < n; ++j) {
      double a_corr = 0.0;
      double b_corr = 0.0;
      switch (rank_case) {
        case RankCase::Rank0: break;
        case RankCase::Rank1ColOnes: a_corr = b_row[j] + gamma * a_row[j]; break;
        case RankCase::Rank1RowOnes: b_corr = b_row[j] + gamma * a_row[j]; break;
        case RankCase::Rank2:
          a_corr = d_row[j];      // row part: D's first row replicated
          b_corr = row_shift;     // column part: D's first column broadcast
          break;
      }
      buffers.a_hat[row_start + j] = gamma * a_row[j] - a_corr;
      buffers.b_hat[row_start + j] = b_row[j] - b_corr;
    }
  }
  report.verdict = Verdict::StrategicallyZeroSum;
  if (!workspace) {
    report.a_hat = std::move(local.a_hat);
    report.b_hat = std::move(local.b_hat);
  }
  return report;
}

std::vector<BenchRecord> bench_run(const std::vector<std::pair<int, int>>& sizes, int reps,
                                   const std::vector<Family>& families, std::uint64_t seed,
                                   ArithmeticMode mode) {
  if (sizes.empty()) throw std::invalid_argument("bench_run needs at least one size");
  if (reps < 1) throw std::invalid_argument("bench_run needs reps >= 1");

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  records.reserve(sizes.size() * families.size() * static_cast<std::size_t>(reps));
  FloatWorkspace workspace;

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const auto [m, n] = sizes[si];
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      if (mode == ArithmeticMode::Float) {
        // Untimed warm-up instance: faults the workspace pages for this size
        // so the measured runs see the algorithm, not the allocator.
        std::mt19937_64 rng(internal::mix_seed(seed, si, fi, static_cast<std::uint64_t>(reps)));
        FloatGame game =
            materialize_float(draw_for_family(families[fi], m, n, rng, (seed & 1u) != 0));
        float_classify(game, 1e-9, &workspace);
      }
      for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t rec_seed = internal::mix_seed(seed, si, fi, rep);
        std::mt19937_64 rng(rec_seed);
        internal::IntGameDraw draw =
            draw_for_family(families[fi], m, n, rng, (rec_seed & 1u) != 0);

        BenchRecord record{.m = m,
                           .n = n,
                           .family = families[fi],
                           .seed = rec_seed,
                           .wall_time_s = 0.0,
                           .verdict = Verdict::NotEquivalentViaPAT,
                           .mode = mode};
        if (mode == ArithmeticMode::Float) {
          FloatGame game = materialize_float(draw);
          auto start = clock::now();
          FloatReport result = float_classify(game, 1e-9, &workspace);
          auto stop = clock::now();
          record.verdict = result.verdict;
          record.wall_time_s = std::chrono::duration<double>(stop - start).count();
        } else {
          BimatrixGame game = internal::to_exact(draw);
          auto start = clock::now();
          EquivalenceReport result = classify(game);
          auto stop = clock::now();
          record.verdict = result.verdict;
          record.wall_time_s = std::chrono::duration<double>(stop - start).count();
        }
        records.push_back(record);
      }
    }
  }
  return records;
}

}  // namespace strateq
