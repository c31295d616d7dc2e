#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "knottab/code.hpp"
#include "knottab/realize.hpp"

namespace knottab {

// Neighbour sets are returned as sorted, duplicate-free canonical forms.

// Kink insertions (up to max_crossings) and kink deletions.
std::vector<PairCode> r1_neighbors(const PairCode& code, int max_crossings);
// Kink (i,i+1) or (i+1,i) inserted at position i in 1..2n+1; labels >= i move up by 2.
PairCode r1_insert(const PairCode& code, Label position, bool rising);

// Bigon creations inside a face (up to max_crossings) and bigon removals.
std::vector<PairCode> r2_neighbors(const PairCode& code, int max_crossings);

// Triangle moves across faces bounded by three crossings.
std::vector<PairCode> r3_neighbors(const PairCode& code);

// Union of the three neighbour sets, plus the mirror code when asked.
std::vector<PairCode> all_neighbors(const PairCode& code, int max_crossings, bool with_mirror);

class BoundTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StoreFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassRecord {
  PairCode canonical_code;
  int permanent_id = 0;
  int temporary_id = 0;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// Stored projections with their permanent and temporary numbers. Temporary
// numbers point at the permanent number of an earlier (or the same) record.
class ClassStore {
 public:
  const std::vector<ClassRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Adds a record with equal, fresh numbers and returns its permanent id.
  int insert(const PairCode& canonical_code);
  std::optional<int> find(const PairCode& canonical_code) const;
  const ClassRecord& record(int permanent_id) const;

  // Follows temporary numbers to a record whose numbers agree.
  int root(int permanent_id) const;
  // Sets the temporary number of every touched record (and of its root) to
  // the minimum root among them.
  void merge(const std::vector<int>& permanent_ids);

  bool is_representative(int permanent_id) const;
  std::vector<int> representatives() const;

  // One line per record: code, tab, permanent id, tab, temporary id.
  std::string serialize() const;
  static ClassStore parse(const std::string& text);

  friend bool operator==(const ClassStore& a, const ClassStore& b) { return a.records_ == b.records_; }

 private:
  std::vector<ClassRecord> records_;
  std::unordered_map<CodeKey, int, CodeKeyHash> index_;
};

struct ClassifyOptions {
  int max_crossings = 0;
  bool identify_mirrors = true;
  // How far above an input's own crossing count its search may climb; the
  // search never exceeds max_crossings either way.
  std::optional<int> headroom;
  // Optional progress hook: (inputs done, inputs total, remembered codes).
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
  // Optional per-input hook: (input, highest ceiling searched, codes visited,
  // whether the input founded a new record).
  std::function<void(const PairCode&, int, std::size_t, bool)> trace;
};

struct ClassifyStats {
  std::size_t inputs = 0;
  std::size_t expanded = 0;
  std::size_t remembered = 0;
  // For each input, in input order, the representative of its class.
  std::vector<int> input_class;
};

// Processes canonical realizable codes in order. Each input is searched
// breadth first, ceiling by ceiling, until a level touches earlier records;
// touched records are merged, an untouched input becomes a new record.
ClassStore classify(const std::vector<PairCode>& codes, const ClassifyOptions& options,
                    ClassifyStats* stats = nullptr);

}  // namespace knottab
