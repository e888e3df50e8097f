#include "strateq/game_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <utility>

namespace strateq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream stream{std::string(line)};
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> data_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!is_comment_or_blank(line)) lines.push_back(tokenize(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

GameMatrix parse_block(const std::vector<std::vector<std::string>>& lines, std::size_t offset,
                       int m, int n, const char* block_name) {
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (int r = 0; r < m; ++r) {
    if (offset + r >= lines.size())
      throw ParseError(std::string("missing block ") + block_name + ": expected " +
                       std::to_string(m) + " rows, found " + std::to_string(r));
    const auto& tokens = lines[offset + r];
    if (static_cast<int>(tokens.size()) != n)
      throw ParseError("row " + std::to_string(r + 1) + " of block " + block_name + " has " +
                       std::to_string(tokens.size()) + " tokens, expected " + std::to_string(n));
    for (const auto& token : tokens) {
      try {
        entries.push_back(Rational::from_text(token));
      } catch (const std::exception& e) {
        throw ParseError("row " + std::to_string(r + 1) + " of block " + block_name + ": " +
                         e.what());
      }
    }
  }
  return GameMatrix(m, n, std::move(entries));
}

ordered_json matrix_json(const GameMatrix& f) {
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= f.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 1; j <= f.cols(); ++j) row.push_back(f.at(i, j).fraction_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& r : v) out.push_back(r.fraction_str());
  return out;
}

void append_matrix_human(std::ostringstream& out, const GameMatrix& f, const std::string& label) {
  out << label << ":\n";
  if (f.rows() > 12 || f.cols() > 12) {
    out << "  (" << f.rows() << "x" << f.cols() << " matrix omitted; use --format machine)\n";
    return;
  }
  for (int i = 1; i <= f.rows(); ++i) {
    out << " ";
    for (int j = 1; j <= f.cols(); ++j) out << " " << f.at(i, j).str();
    out << "\n";
  }
}

std::string join_rationals(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += " ";
    out += v[i].str();
  }
  return out;
}

ordered_json report_json(const EquivalenceReport& report, bool include_sc) {
  ordered_json doc;
  doc["format_version"] = 1;
  doc["verdict"] = to_token(report.verdict);
  if (report.reason) doc["reason"] = to_token(*report.reason);
  if (report.gamma) doc["gamma"] = report.gamma->fraction_str();
  if (report.rank_case) doc["rank_case"] = to_token(*report.rank_case);
  if (include_sc) doc["strictly_competitive"] = report.strictly_competitive;
  if (report.d_matrix) doc["d_matrix"] = matrix_json(*report.d_matrix);
  if (report.a_hat) doc["a_hat"] = matrix_json(*report.a_hat);
  if (report.b_hat) doc["b_hat"] = matrix_json(*report.b_hat);
  return doc;
}

std::string report_human(const EquivalenceReport& report, bool include_sc) {
  std::ostringstream out;
  out << "verdict:              " << to_token(report.verdict) << "\n";
  if (report.reason) out << "reason:               " << to_token(*report.reason) << "\n";
  if (report.gamma) out << "gamma:                " << report.gamma->str() << "\n";
  if (report.rank_case) out << "rank case:            " << to_token(*report.rank_case) << "\n";
  if (include_sc)
    out << "strictly competitive: " << (report.strictly_competitive ? "yes" : "no") << "\n";
  if (report.a_hat) append_matrix_human(out, *report.a_hat, "equivalent zero-sum payoffs (row player)");
  return out.str();
}

}  // namespace

BimatrixGame parse_game_file(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("empty game file");

  const auto& header = lines[0];
  if (header.size() != 2) throw ParseError("header must be exactly 'm n'");
  int m = 0;
  int n = 0;
  try {
    std::size_t pos = 0;
    m = std::stoi(header[0], &pos);
    if (pos != header[0].size()) throw ParseError("bad m");
    n = std::stoi(header[1], &pos);
    if (pos != header[1].size()) throw ParseError("bad n");
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("header must contain two integers: 'm n'");
  }
  if (m < 1 || n < 1) throw ParseError("m and n must be >= 1");

  GameMatrix a = parse_block(lines, 1, m, n, "A");
  GameMatrix b = parse_block(lines, 1 + static_cast<std::size_t>(m), m, n, "B");
  if (lines.size() != 1 + 2 * static_cast<std::size_t>(m))
    throw ParseError("unexpected data after block B");
  return {std::move(a), std::move(b)};
}

std::string render_game_file(const BimatrixGame& game) {
  std::ostringstream out;
  out << game.rows() << " " << game.cols() << "\n";
  for (const GameMatrix* block : {&game.a_tilde, &game.b_tilde}) {
    for (int i = 1; i <= block->rows(); ++i) {
      for (int j = 1; j <= block->cols(); ++j) {
        if (j > 1) out << " ";
        out << block->at(i, j).str();
      }
      out << "\n";
    }
    if (block == &game.a_tilde) out << "\n";
  }
  return out.str();
}

std::string emit_report(const EquivalenceReport& report, ReportFormat format,
                        bool include_strictly_competitive) {
  if (format == ReportFormat::Machine)
    return report_json(report, include_strictly_competitive).dump(2) + "\n";
  return report_human(report, include_strictly_competitive);
}

std::string emit_outcome(const SolveOutcome& outcome, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["status"] = to_token(outcome.status);
    if (outcome.profile) {
      doc["p"] = vector_json(outcome.profile->p);
      doc["q"] = vector_json(outcome.profile->q);
      doc["value"] = outcome.profile->value.fraction_str();
    }
    doc["report"] = report_json(outcome.report, true);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "status:               " << to_token(outcome.status) << "\n";
  if (outcome.profile) {
    out << "p:                    " << join_rationals(outcome.profile->p) << "\n";
    out << "q:                    " << join_rationals(outcome.profile->q) << "\n";
    out << "value:                " << outcome.profile->value.str() << "\n";
  }
  out << report_human(outcome.report, true);
  return out.str();
}

std::string emit_profiles(const std::vector<MixedProfile>& profiles, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["equilibria"] = ordered_json::array();
    for (const auto& profile : profiles) {
      ordered_json entry;
      entry["p"] = vector_json(profile.p);
      entry["q"] = vector_json(profile.q);
      entry["value"] = profile.value.fraction_str();
      doc["equilibria"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << profiles.size() << " equilibria found\n";
  for (std::size_t idx = 0; idx < profiles.size(); ++idx) {
    out << "#" << (idx + 1) << " p: " << join_rationals(profiles[idx].p)
        << " | q: " << join_rationals(profiles[idx].q)
        << " | value: " << profiles[idx].value.str() << "\n";
  }
  return out.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "m,n,family,seed,wall_time_s,verdict,mode\n";
  for (const auto& record : records) {
    out << record.m << "," << record.n << "," << to_token(record.family) << "," << record.seed
        << "," << record.wall_time_s << "," << to_token(record.verdict) << ","
        << to_token(record.mode) << "\n";
  }
  return out.str();
}

}  // namespace strateq
