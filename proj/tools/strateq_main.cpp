// strateq: decide whether a bimatrix game is strategically equivalent to a
// zero-sum game, construct the equivalent game, and solve it exactly.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "strateq/bench.hpp"
#include "strateq/game_io.hpp"
#include "strateq/generators.hpp"
#include "strateq/nash.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 2;
constexpr int kExitInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw strateq::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

strateq::ReportFormat parse_format(const std::string& token) {
  if (token == "human") return strateq::ReportFormat::Human;
  if (token == "machine" || token == "json" || token == "json-like-machine")
    return strateq::ReportFormat::Machine;
  throw CLI::ValidationError("--format", "expected 'human' or 'machine'");
}

strateq::Family parse_family(const std::string& token) {
  if (token == "equivalent") return strateq::Family::Equivalent;
  if (token == "pure-ne" || token == "pure_ne") return strateq::Family::PureNe;
  if (token == "non-equivalent" || token == "non_equivalent")
    return strateq::Family::NonEquivalent;
  throw CLI::ValidationError("family",
                             "expected 'equivalent', 'pure-ne' or 'non-equivalent'");
}

std::vector<std::pair<int, int>> parse_sizes(const std::vector<std::string>& tokens) {
  std::vector<std::pair<int, int>> sizes;
  for (const auto& token : tokens) {
    auto cross = token.find('x');
    if (cross == std::string::npos) {
      int n = std::stoi(token);
      sizes.emplace_back(n, n);
    } else {
      sizes.emplace_back(std::stoi(token.substr(0, cross)),
                         std::stoi(token.substr(cross + 1)));
    }
  }
  return sizes;
}

int run(int argc, char** argv) {
  CLI::App app{"Strategic-equivalence toolkit for bimatrix games"};
  app.require_subcommand(1);

  std::string game_path;
  std::string format_token = "human";

  auto add_game_command = [&](const char* name, const char* description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->add_option("file", game_path, "game file")->required();
    cmd->add_option("--format", format_token, "output format: human|machine");
    return cmd;
  };

  CLI::App* check = add_game_command("check", "classify a game (without the competitiveness flag)");
  CLI::App* classify_cmd = add_game_command("classify", "classify a game, including strict competitiveness");
  CLI::App* solve = add_game_command("solve", "classify and solve for a Nash equilibrium");

  CLI::App* oracle = app.add_subcommand("oracle", "support-enumeration equilibrium search (small games)");
  int max_support = 0;
  oracle->add_option("file", game_path, "game file")->required();
  oracle->add_option("--max-support", max_support, "largest support size per player (default min(m, n))");
  oracle->add_option("--format", format_token, "output format: human|machine");

  CLI::App* gen = app.add_subcommand("gen", "generate a game of a given family");
  std::string family_token = "equivalent";
  int gen_m = 3;
  int gen_n = 3;
  std::uint64_t gen_seed = 1;
  std::string out_path;
  gen->add_option("--family", family_token, "equivalent|pure-ne|non-equivalent")->required();
  gen->add_option("--m", gen_m, "rows")->required();
  gen->add_option("--n", gen_n, "columns")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", out_path, "output path (stdout when omitted)");

  CLI::App* bench = app.add_subcommand("bench", "time the classifier on generated instances");
  std::vector<std::string> size_tokens;
  std::vector<std::string> family_tokens{"equivalent"};
  int reps = 10;
  std::uint64_t bench_seed = 1;
  std::string mode_token = "exact";
  std::string csv_path;
  bench->add_option("--sizes", size_tokens, "comma-separated sizes, e.g. 256,512 or 64x128")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", reps, "instances per size and family");
  bench->add_option("--families", family_tokens, "families to draw from")->delimiter(',');
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--mode", mode_token, "exact|float");
  bench->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParseError;
  }

  if (check->parsed() || classify_cmd->parsed()) {
    strateq::BimatrixGame game = strateq::parse_game_file(read_file(game_path));
    strateq::EquivalenceReport report = strateq::classify(game);
    std::cout << strateq::emit_report(report, parse_format(format_token),
                                      /*include_strictly_competitive=*/classify_cmd->parsed());
    return kExitOk;
  }
  if (solve->parsed()) {
    strateq::BimatrixGame game = strateq::parse_game_file(read_file(game_path));
    strateq::SolveOutcome outcome = strateq::solve_strat_ne(game);
    std::cout << strateq::emit_outcome(outcome, parse_format(format_token));
    return kExitOk;
  }
  if (oracle->parsed()) {
    strateq::BimatrixGame game = strateq::parse_game_file(read_file(game_path));
    int limit = max_support > 0 ? max_support : std::min(game.rows(), game.cols());
    auto profiles = strateq::support_enumeration(game.a_tilde, game.b_tilde, limit);
    std::cout << strateq::emit_profiles(profiles, parse_format(format_token));
    return kExitOk;
  }
  if (gen->parsed()) {
    strateq::Family family = parse_family(family_token);
    strateq::BimatrixGame game = [&] {
      switch (family) {
        case strateq::Family::Equivalent:
          return strateq::gen_pat_zero_sum(gen_m, gen_n, gen_seed).first;
        case strateq::Family::PureNe:
          return strateq::gen_pure_ne(gen_m, gen_n, gen_seed);
        default:
          return strateq::gen_non_equivalent(gen_m, gen_n, gen_seed);
      }
    }();
    write_output(out_path, strateq::render_game_file(game));
    return kExitOk;
  }
  if (bench->parsed()) {
    if (mode_token != "exact" && mode_token != "float")
      throw CLI::ValidationError("--mode", "expected 'exact' or 'float'");
    std::vector<strateq::Family> families;
    for (const auto& token : family_tokens) families.push_back(parse_family(token));
    auto records = strateq::bench_run(parse_sizes(size_tokens), reps, families, bench_seed,
                                      mode_token == "float" ? strateq::ArithmeticMode::Float
                                                            : strateq::ArithmeticMode::Exact);
    write_output(csv_path, strateq::bench_csv(records));
    return kExitOk;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const strateq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
