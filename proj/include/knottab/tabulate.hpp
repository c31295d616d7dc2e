#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knottab/colortests.hpp"
#include "knottab/moves.hpp"

namespace knottab {

class ConfigMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorruptCheckpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TestBudget {
  int max_colors = 5;             // enumerated tests with 1..max_colors colors
  bool alexander = true;          // Alexander polynomial entry
  std::vector<int> affine_mods;   // affine(p, 1) for each listed modulus
  int sym_max = 5;                // conjugation tests from S_2..S_sym_max
};

struct RunConfig {
  int max_crossings = 0;
  // Largest crossing number fed to the classifier; defaults to N - 3.
  std::optional<int> input_crossings;
  // Search climb above each input; defaults to N minus the input bound.
  std::optional<int> headroom;
  TestBudget budget;
  bool identify_mirrors = true;
  std::filesystem::path checkpoint_path;
  int jobs = 1;

  int effective_input_crossings() const;
  int effective_headroom() const;
  // key=value lines; covers every field that affects results.
  std::string serialize() const;
};

struct TableRow {
  int crossing_number = 0;
  int class_count = 0;
  int distinguished_count = 0;
  std::vector<std::pair<int, int>> unresolved_pairs;
  // Classes whose representative is a composite diagram (connected sums);
  // they are kept apart from the prime knot count above.
  int composite_count = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Report {
  ClassStore store;
  std::vector<ColorMatrix> suite;
  std::map<int, InvariantVector> vectors;  // by permanent id, representatives only
  std::vector<TableRow> rows;
  std::string table;
};

// Canonical realizable codes with at most `max_input` crossings.
std::vector<PairCode> classification_inputs(int max_input);

// Enumerated tests first, then affine tests, then irreducible conjugation
// tests with at least two colors; duplicates under same_test are dropped.
std::vector<ColorMatrix> default_suite(const TestBudget& budget);

std::map<int, InvariantVector> compute_invariants(const ClassStore& store, const std::vector<ColorMatrix>& suite,
                                                  bool with_polynomial, int jobs = 1);

// Groups representatives by identical vectors. Rows run from 0 to max_row
// (or the largest representative crossing number when max_row < 0); a pair
// is listed in the row of its larger permanent id. Representatives that are
// composite diagrams are counted separately from the knot column.
std::vector<TableRow> distinguish(const ClassStore& store, const std::map<int, InvariantVector>& vectors,
                                  int max_row = -1);

std::string emit_table(const std::vector<TableRow>& rows);

// Runs (or, with resume, continues) the staged pipeline and writes
// config.txt, codes.txt, classes.tsv, suite.txt, invariants.tsv and
// table.txt into the checkpoint directory when one is set.
using StageHook = std::function<void(const std::string& stage)>;
Report run(const RunConfig& config, bool resume = false, const StageHook& after_stage = {});

// run(config, true): continues from the last stage whose checkpoint is
// complete. Throws ConfigMismatch when the directory holds another config.
Report resume(const RunConfig& config, const StageHook& after_stage = {});

// Reads the finished table of a checkpoint directory.
std::string read_table(const std::filesystem::path& checkpoint_path);

}  // namespace knottab
