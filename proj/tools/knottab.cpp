// knottab: command-line front end for the tabulation pipeline.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knottab/alexander.hpp"
#include "knottab/colortests.hpp"
#include "knottab/moves.hpp"
#include "knottab/tabulate.hpp"

using namespace knottab;

namespace {

// Non-empty lines that are not `#` comments.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return content_lines(in);
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot projection tabulation"};
  app.require_subcommand(1);

  int max_crossings = 0;
  int max_colors = 3;
  bool canonical_only = false;
  bool no_mirror = false;
  std::optional<int> input_crossings;
  std::optional<int> headroom;
  std::string suite_path;
  std::string codes_path;
  bool no_poly = false;
  std::string affine_mods;
  int sym_max = 5;
  std::string checkpoint;
  bool resume_run = false;
  int jobs = 1;

  auto* enumerate = app.add_subcommand("enumerate", "list parity-valid codes with exactly N crossings");
  enumerate->add_option("--max-crossings", max_crossings, "crossing count")->required()->check(CLI::Range(0, kMaxCrossings));
  enumerate->add_flag("--canonical-only", canonical_only, "only canonical representatives");

  auto* classify_cmd = app.add_subcommand("classify", "classify realizable codes and print the class store");
  classify_cmd->add_option("--max-crossings", max_crossings, "search bound N")->required()->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--no-mirror-identify", no_mirror, "keep mirror images apart");
  classify_cmd->add_option("--input-crossings", input_crossings, "largest input crossing count (default N-3)");
  classify_cmd->add_option("--headroom", headroom, "search climb above each input (default N minus input bound)");

  auto* tests = app.add_subcommand("tests", "list inequivalent irreducible color tests");
  tests->add_option("--max-colors", max_colors, "largest color count")->required()->check(CLI::NonNegativeNumber);

  auto* invariants = app.add_subcommand("invariants", "invariant vector of each code read from --codes or stdin");
  invariants->add_option("--suite", suite_path, "file with one test matrix per line")->required();
  invariants->add_option("--codes", codes_path, "file with one code per line");
  invariants->add_flag("--no-polynomial", no_poly, "omit the Alexander polynomial");

  auto* run_cmd = app.add_subcommand("run", "full staged pipeline with checkpoints");
  run_cmd->add_option("--max-crossings", max_crossings, "search bound N")->required()->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--max-colors", max_colors, "enumerated tests up to this many colors")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--affine-mods", affine_mods, "comma-separated moduli for affine tests");
  run_cmd->add_option("--sym-max", sym_max, "conjugation tests from S_2..S_M")->check(CLI::Range(0, 9));
  run_cmd->add_option("--checkpoint", checkpoint, "checkpoint directory")->required();
  run_cmd->add_flag("--resume", resume_run, "continue from the last completed stage");
  run_cmd->add_option("--jobs", jobs, "worker threads for invariants")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--no-mirror-identify", no_mirror, "keep mirror images apart");
  run_cmd->add_option("--input-crossings", input_crossings, "largest input crossing count (default N-3)");
  run_cmd->add_option("--headroom", headroom, "search climb above each input (default N minus input bound)");

  auto* table = app.add_subcommand("table", "print the table of a finished checkpoint");
  table->add_option("--checkpoint", checkpoint, "checkpoint directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      enumerate_codes(max_crossings, canonical_only, [](const PairCode& c) { std::cout << to_string(c) << '\n'; });
    } else if (*classify_cmd) {
      RunConfig config;
      config.max_crossings = max_crossings;
      config.input_crossings = input_crossings;
      config.headroom = headroom;
      ClassifyOptions options;
      options.max_crossings = max_crossings;
      options.identify_mirrors = !no_mirror;
      options.headroom = config.effective_headroom();
      std::cout << classify(classification_inputs(config.effective_input_crossings()), options).serialize();
    } else if (*tests) {
      for (int n = 1; n <= max_colors; ++n)
        for (const auto& m : enumerate_tests(n)) std::cout << to_string(m) << '\n';
    } else if (*invariants) {
      std::vector<ColorMatrix> suite;
      for (const auto& line : read_lines(suite_path)) suite.push_back(parse_matrix(line));
      const auto codes = codes_path.empty() ? content_lines(std::cin) : read_lines(codes_path);
      for (const auto& line : codes) {
        const PairCode code = parse_code(line);
        const Diagram d = realize(code);
        InvariantVector v = invariant_vector(d, suite);
        if (!no_poly) v.polynomial = alexander_poly(d);
        std::cout << to_string(code) << '\t' << to_string(v) << '\n';
      }
    } else if (*run_cmd) {
      RunConfig config;
      config.max_crossings = max_crossings;
      config.input_crossings = input_crossings;
      config.headroom = headroom;
      config.budget.max_colors = max_colors;
      config.budget.affine_mods = parse_list(affine_mods);
      config.budget.sym_max = sym_max;
      config.identify_mirrors = !no_mirror;
      config.checkpoint_path = checkpoint;
      config.jobs = jobs;
      const Report r = run(config, resume_run, [](const std::string& stage) { std::cerr << "stage " << stage << " done\n"; });
      std::cout << r.table;
    } else if (*table) {
      std::cout << read_table(checkpoint);
    }
  } catch (const std::exception& e) {
    std::cerr << "knottab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
