#include "knottab/tabulate.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace knottab {

namespace fs = std::filesystem;

namespace {

const char* const kStages[] = {"codes.txt", "classes.tsv", "suite.txt", "invariants.tsv", "table.txt"};

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Checkpoint files end with `# end <lines>` so truncation is detectable.
void write_checkpoint(const fs::path& path, const std::vector<std::string>& lines) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    for (const auto& l : lines) out << l << '\n';
    out << "# end " << lines.size() << '\n';
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::optional<std::vector<std::string>> read_checkpoint(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  const std::string trailer = lines.empty() ? "" : lines.back();
  if (trailer.rfind("# end ", 0) != 0) throw CorruptCheckpoint(path.string() + ": missing end marker");
  lines.pop_back();
  if (trailer != "# end " + std::to_string(lines.size()))
    throw CorruptCheckpoint(path.string() + ": line count does not match end marker");
  return lines;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

template <typename F>
auto parse_stage(const fs::path& path, F&& f) {
  try {
    return f();
  } catch (const CorruptCheckpoint&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptCheckpoint(path.string() + ": " + e.what());
  }
}

}  // namespace

int RunConfig::effective_input_crossings() const {
  const int k = input_crossings.value_or(std::max(0, max_crossings - 3));
  return std::min(k, max_crossings);
}

int RunConfig::effective_headroom() const {
  return headroom.value_or(max_crossings - effective_input_crossings());
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "max_crossings=" << max_crossings << '\n'
      << "input_crossings=" << effective_input_crossings() << '\n'
      << "headroom=" << effective_headroom() << '\n'
      << "identify_mirrors=" << (identify_mirrors ? 1 : 0) << '\n'
      << "max_colors=" << budget.max_colors << '\n'
      << "alexander=" << (budget.alexander ? 1 : 0) << '\n'
      << "affine_mods=" << join_ints(budget.affine_mods) << '\n'
      << "sym_max=" << budget.sym_max << '\n';
  return out.str();
}

std::vector<PairCode> classification_inputs(int max_input) {
  std::vector<PairCode> out;
  for (int n = 0; n <= max_input; ++n)
    enumerate_codes(n, true, [&](const PairCode& c) {
      if (is_realizable(c)) out.push_back(c);
    });
  return out;
}

std::vector<ColorMatrix> default_suite(const TestBudget& budget) {
  std::vector<ColorMatrix> suite;
  auto add = [&](const ColorMatrix& m) {
    for (const auto& s : suite)
      if (s.size() == m.size() && same_test(s, m)) return;
    suite.push_back(m);
  };
  for (int n = 1; n <= budget.max_colors; ++n)
    for (const auto& m : enumerate_tests(n)) add(m);
  for (int p : budget.affine_mods) add(affine(p, 1));
  for (int m = 2; m <= budget.sym_max; ++m) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int left, int cap) {
      if (left == 0) {
        parts.push_back(current);
        return;
      }
      for (int p = std::min(left, cap); p >= 1; --p) {
        current.push_back(p);
        rec(left - p, p);
        current.pop_back();
      }
    };
    rec(m, m);
    for (const auto& part : parts) {
      if (part.front() == 1) continue;
      const ColorMatrix c = conjugation(m, part);
      if (c.size() >= 2 && irreducible(c)) add(c);
    }
  }
  return suite;
}

std::map<int, InvariantVector> compute_invariants(const ClassStore& store, const std::vector<ColorMatrix>& suite,
                                                  bool with_polynomial, int jobs) {
  const auto reps = store.representatives();
  std::vector<InvariantVector> results(reps.size());
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < reps.size(); i += step) {
      const Diagram d = realize(store.record(reps[i]).canonical_code);
      results[i] = invariant_vector(d, suite);
      if (with_polynomial) results[i].polynomial = alexander_poly(d);
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  std::map<int, InvariantVector> out;
  for (std::size_t i = 0; i < reps.size(); ++i) out.emplace(reps[i], std::move(results[i]));
  return out;
}

std::vector<TableRow> distinguish(const ClassStore& store, const std::map<int, InvariantVector>& vectors,
                                  int max_row) {
  const auto reps = store.representatives();
  std::map<InvariantVector, std::vector<int>> groups;
  int top = max_row;
  for (int id : reps) {
    auto it = vectors.find(id);
    if (it == vectors.end()) throw std::invalid_argument("no invariants for representative " + std::to_string(id));
    groups[it->second].push_back(id);
    if (max_row < 0) top = std::max(top, store.record(id).canonical_code.crossing_count());
  }
  std::vector<TableRow> rows;
  for (int c = 0; c <= top; ++c) rows.push_back({c, 0, 0, {}, 0});
  auto row_of = [&](int id) -> TableRow* {
    const int c = store.record(id).canonical_code.crossing_count();
    return c <= top ? &rows[c] : nullptr;
  };
  for (int id : reps) {
    TableRow* row = row_of(id);
    if (!row) continue;
    if (is_composite_diagram(store.record(id).canonical_code)) {
      ++row->composite_count;
      continue;
    }
    ++row->class_count;
    if (groups[vectors.at(id)].size() == 1) ++row->distinguished_count;
  }
  for (const auto& [vec, ids] : groups) {
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        if (TableRow* row = row_of(ids[b])) row->unresolved_pairs.emplace_back(ids[a], ids[b]);
  }
  for (auto& row : rows) std::sort(row.unresolved_pairs.begin(), row.unresolved_pairs.end());
  return rows;
}

std::string emit_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::setw(9) << "crossings" << std::setw(8) << "knots" << std::setw(15) << "distinguished"
      << std::setw(11) << "composite" << '\n';
  for (const auto& r : rows)
    out << std::setw(9) << r.crossing_number << std::setw(8) << r.class_count << std::setw(15)
        << r.distinguished_count << std::setw(11) << r.composite_count << '\n';
  bool header = false;
  for (const auto& r : rows) {
    for (const auto& [a, b] : r.unresolved_pairs) {
      if (!header) out << "unresolved pairs (permanent ids):\n";
      header = true;
      out << std::setw(9) << r.crossing_number << "  " << a << " " << b << '\n';
    }
  }
  return out.str();
}

Report run(const RunConfig& config, bool resume, const StageHook& after_stage) {
  if (config.max_crossings < 0) throw std::invalid_argument("max_crossings must be non-negative");
  if (config.budget.max_colors < 0 || config.budget.sym_max < 0 || config.effective_headroom() < 0 ||
      config.effective_input_crossings() < 0)
    throw std::invalid_argument("budgets must be non-negative");
  const bool persist = !config.checkpoint_path.empty();
  const fs::path dir = config.checkpoint_path;
  auto stage_path = [&](int s) { return dir / kStages[s]; };
  auto done = [&](const std::string& name) {
    if (after_stage) after_stage(name);
  };

  if (persist) {
    fs::create_directories(dir);
    const fs::path cfg = dir / "config.txt";
    if (resume) {
      auto lines = read_checkpoint(cfg);
      if (!lines) throw CorruptCheckpoint(cfg.string() + ": missing");
      if (join_lines(*lines) != config.serialize())
        throw ConfigMismatch("checkpoint " + dir.string() + " was written with a different configuration");
    } else {
      for (int s = 0; s < 5; ++s) fs::remove(stage_path(s));
      write_checkpoint(cfg, split_lines(config.serialize()));
    }
  }
  // Stages after the first missing one are recomputed.
  bool fresh = !persist || !resume;
  auto load = [&](int s) -> std::optional<std::vector<std::string>> {
    if (fresh) return std::nullopt;
    auto lines = read_checkpoint(stage_path(s));
    if (!lines) fresh = true;
    return lines;
  };
  auto save = [&](int s, const std::vector<std::string>& lines) {
    if (persist) write_checkpoint(stage_path(s), lines);
  };

  Report report;
  const int max_input = config.effective_input_crossings();

  std::vector<PairCode> codes;
  if (auto lines = load(0)) {
    codes = parse_stage(stage_path(0), [&] {
      std::vector<PairCode> out;
      for (const auto& l : *lines) out.push_back(parse_code(l));
      return out;
    });
  } else {
    codes = classification_inputs(max_input);
    std::vector<std::string> lines2;
    for (const auto& c : codes) lines2.push_back(to_string(c));
    save(0, lines2);
  }
  done("enumerate");

  if (auto lines = load(1)) {
    report.store = parse_stage(stage_path(1), [&] { return ClassStore::parse(join_lines(*lines)); });
  } else {
    ClassifyOptions options;
    options.max_crossings = config.max_crossings;
    options.identify_mirrors = config.identify_mirrors;
    options.headroom = config.effective_headroom();
    report.store = classify(codes, options);
    save(1, split_lines(report.store.serialize()));
  }
  done("classify");

  if (auto lines = load(2)) {
    report.suite = parse_stage(stage_path(2), [&] {
      std::vector<ColorMatrix> out;
      for (const auto& l : *lines) out.push_back(parse_matrix(l));
      return out;
    });
  } else {
    report.suite = default_suite(config.budget);
    std::vector<std::string> lines2;
    for (const auto& m : report.suite) lines2.push_back(to_string(m));
    save(2, lines2);
  }
  done("suite");

  if (auto lines = load(3)) {
    report.vectors = parse_stage(stage_path(3), [&] {
      std::map<int, InvariantVector> out;
      for (const auto& l : *lines) {
        const auto tab = l.find('\t');
        if (tab == std::string::npos) throw std::invalid_argument("expected id, tab, vector");
        std::size_t used = 0;
        const int id = std::stoi(l.substr(0, tab), &used);
        if (used != tab || !report.store.is_representative(id))
          throw std::invalid_argument("bad representative id");
        out.emplace(id, parse_invariant_vector(l.substr(tab + 1)));
      }
      if (out.size() != report.store.representatives().size())
        throw std::invalid_argument("representative count differs from class store");
      return out;
    });
  } else {
    report.vectors = compute_invariants(report.store, report.suite, config.budget.alexander, config.jobs);
    std::vector<std::string> lines2;
    for (const auto& [id, v] : report.vectors) lines2.push_back(std::to_string(id) + '\t' + to_string(v));
    save(3, lines2);
  }
  done("invariants");

  report.rows = distinguish(report.store, report.vectors, max_input);
  report.table = emit_table(report.rows);
  if (auto lines = load(4)) {
    if (join_lines(*lines) != report.table)
      throw CorruptCheckpoint(stage_path(4).string() + ": table does not match earlier stages");
  } else {
    save(4, split_lines(report.table));
  }
  done("table");
  return report;
}

Report resume(const RunConfig& config, const StageHook& after_stage) { return run(config, true, after_stage); }

std::string read_table(const fs::path& checkpoint_path) {
  const fs::path path = checkpoint_path / kStages[4];
  auto lines = read_checkpoint(path);
  if (!lines) throw CorruptCheckpoint(path.string() + ": missing; run the pipeline first");
  return join_lines(*lines);
}

}  // namespace knottab
