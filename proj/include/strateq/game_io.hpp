#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strateq/bench.hpp"
#include "strateq/matrix.hpp"
#include "strateq/nash.hpp"

namespace strateq {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Game file format:
///   line 1: "m n"
///   m rows of n whitespace-separated payoff tokens for the row player
///   m rows for the column player
/// Tokens are integers, fractions "p/q" or finite decimals. Blank lines may
/// separate sections and lines starting with '#' are ignored. Throws
/// ParseError with the offending row and block on malformed input.
BimatrixGame parse_game_file(std::string_view text);

/// Inverse of parse_game_file: parse(render(g)) == g exactly.
std::string render_game_file(const BimatrixGame& game);

enum class ReportFormat { Human, Machine };

/// Classification report. The machine format is a versioned JSON document
/// with every rational rendered as an exact "p/q" string; the human format
/// is an aligned, lossy summary. `include_strictly_competitive` distinguishes
/// the `classify` command from the plain `check`.
std::string emit_report(const EquivalenceReport& report, ReportFormat format,
                        bool include_strictly_competitive = true);

/// Solve outcome: the report plus solver status and, when found, the exact
/// equilibrium profile.
std::string emit_outcome(const SolveOutcome& outcome, ReportFormat format);

/// Equilibria from the support-enumeration oracle.
std::string emit_profiles(const std::vector<MixedProfile>& profiles, ReportFormat format);

/// One line per record under the fixed header
/// "m,n,family,seed,wall_time_s,verdict,mode".
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace strateq
