#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strateq/equivalence.hpp"
#include "strateq/matrix.hpp"

namespace strateq {

enum class Family { Equivalent, PureNe, NonEquivalent };
enum class ArithmeticMode { Exact, Float };

const char* to_token(Family f);
const char* to_token(ArithmeticMode m);

struct BenchRecord {
  int m = 0;
  int n = 0;
  Family family = Family::Equivalent;
  std::uint64_t seed = 0;  // per-record seed; regenerates this instance
  double wall_time_s = 0.0;
  Verdict verdict = Verdict::NotEquivalentViaPAT;
  ArithmeticMode mode = ArithmeticMode::Exact;
};

/// Runs classify on freshly generated instances for every size x family x
/// rep combination, in that nesting order, timing only the classification
/// (generation and materialization excluded). Float mode runs the
/// double-precision pipeline below instead of the exact one.
std::vector<BenchRecord> bench_run(const std::vector<std::pair<int, int>>& sizes, int reps,
                                   const std::vector<Family>& families, std::uint64_t seed,
                                   ArithmeticMode mode);

/// Hardware-float mirror of BimatrixGame, used only for benchmarking.
struct FloatGame {
  int m = 0;
  int n = 0;
  std::vector<double> a;  // row-major
  std::vector<double> b;
};

FloatGame to_float(const BimatrixGame& game);

struct FloatReport {
  Verdict verdict = Verdict::NotEquivalentViaPAT;
  std::optional<Refusal> reason;
  std::optional<RankCase> rank_case;
  double gamma = 0.0;
  std::vector<double> a_hat;  // filled for strategically zero-sum games
  std::vector<double> b_hat;
};

/// Reusable buffers for float_classify. Passing the same workspace across
/// calls keeps the timing loop free of allocator and page-fault noise; the
/// equivalent game is then left in the workspace instead of the report.
struct FloatWorkspace {
  std::vector<double> d_row;  // first row and column of D; the full D matrix
  std::vector<double> d_col;  // is never materialized on the float path
  std::vector<double> a_hat;
  std::vector<double> b_hat;
};

/// Double-precision run of the classification pipeline. Membership scans
/// treat magnitudes <= eps as zero; everything else mirrors the exact path,
/// including construction of the equivalent game.
FloatReport float_classify(const FloatGame& game, double eps = 1e-9,
                           FloatWorkspace* workspace = nullptr);

}  // namespace strateq
