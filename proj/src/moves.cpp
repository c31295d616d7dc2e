#include "knottab/moves.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace knottab {

namespace {

struct Tables {
  int m = 0;
  std::vector<Label> partner;
  std::vector<char> over;
  std::vector<int> crossing_of;

  explicit Tables(const PairCode& code)
      : m(code.label_count()), partner(m + 1, 0), over(m + 1, 0), crossing_of(m + 1, -1) {
    for (int c = 0; c < code.crossing_count(); ++c) {
      const auto& p = code.pairs()[c];
      partner[p.over] = p.under;
      partner[p.under] = p.over;
      over[p.over] = 1;
      crossing_of[p.over] = crossing_of[p.under] = c;
    }
  }

  Label next(Label l) const { return l % m + 1; }
};

// Inserts new points into segments of the curve. Points on the same segment
// keep their listed order; segment 0 is the whole circle of the empty code.
// `links` pairs point indices as (over point, under point).
PairCode insert_points(const PairCode& code, const std::vector<Label>& segment_of,
                       const std::vector<std::pair<int, int>>& links) {
  const int m = code.label_count();
  std::vector<Label> old_label(m + 1, 0);
  std::vector<Label> point_label(segment_of.size(), 0);
  Label next = 0;
  for (Label l = 0; l <= m; ++l) {
    if (l > 0) old_label[l] = ++next;
    for (std::size_t p = 0; p < segment_of.size(); ++p)
      if (segment_of[p] == l) point_label[p] = ++next;
  }
  std::vector<Pair> pairs;
  pairs.reserve(code.pairs().size() + links.size());
  for (const auto& p : code.pairs()) pairs.push_back({old_label[p.over], old_label[p.under]});
  for (const auto& [o, u] : links) pairs.push_back({point_label[o], point_label[u]});
  return PairCode(std::move(pairs));
}

PairCode remove_crossings(const PairCode& code, const std::vector<int>& crossings) {
  const int m = code.label_count();
  std::vector<char> gone(m + 1, 0);
  for (int c : crossings) {
    gone[code.pairs()[c].over] = 1;
    gone[code.pairs()[c].under] = 1;
  }
  std::vector<Label> renamed(m + 1, 0);
  Label next = 0;
  for (Label l = 1; l <= m; ++l)
    if (!gone[l]) renamed[l] = ++next;
  std::vector<Pair> pairs;
  for (const auto& p : code.pairs())
    if (!gone[p.over]) pairs.push_back({renamed[p.over], renamed[p.under]});
  return PairCode(std::move(pairs));
}

using Sink = std::function<void(const PairCode&)>;

void r1_additions(const PairCode& code, int max_crossings, const Sink& sink) {
  if (code.crossing_count() + 1 > max_crossings) return;
  for (Label i = 1; i <= code.label_count() + 1; ++i) {
    sink(r1_insert(code, i, true));
    sink(r1_insert(code, i, false));
  }
}

void r1_deletions(const PairCode& code, const Sink& sink) {
  const Tables t(code);
  for (int c = 0; c < code.crossing_count(); ++c) {
    const auto& p = code.pairs()[c];
    if (t.next(p.over) == p.under || t.next(p.under) == p.over) sink(remove_crossings(code, {c}));
  }
}

void r2_additions(const PairCode& code, const std::vector<Diagram>& embeddings, int max_crossings,
                  const Sink& sink) {
  if (code.crossing_count() + 2 > max_crossings) return;
  for (const auto& d : embeddings) {
    for (const auto& face : d.faces) {
      for (std::size_t p = 0; p < face.size(); ++p) {
        for (std::size_t q = p; q < face.size(); ++q) {
          const Label s1 = face[p].segment;
          const Label s2 = face[q].segment;
          // Points 0,1 lie on s1 and 2,3 on s2, each pair in curve order.
          std::vector<std::pair<int, int>> crossings;
          if (p == q) {
            crossings = {{0, 3}, {1, 2}};
          } else {
            if (s1 == s2) continue;
            if (face[p].forward == face[q].forward)
              crossings = {{0, 3}, {1, 2}};
            else
              crossings = {{0, 2}, {1, 3}};
          }
          const std::vector<Label> segments = {s1, s1, s2, s2};
          for (bool first_over : {true, false}) {
            auto links = crossings;
            if (!first_over)
              for (auto& [a, b] : links) std::swap(a, b);
            PairCode out = insert_points(code, segments, links);
            if (is_realizable(out)) sink(out);
          }
        }
      }
    }
  }
}

void r2_deletions(const PairCode& code, const std::vector<Diagram>& embeddings, const Sink& sink) {
  const Tables t(code);
  for (const auto& d : embeddings) {
    for (const auto& face : d.faces) {
      if (face.size() != 2) continue;
      const Label a = face[0].segment;
      const int x = t.crossing_of[a];
      const int y = t.crossing_of[t.next(a)];
      if (x == y) continue;
      if (t.over[a] != t.over[t.next(a)]) continue;
      sink(remove_crossings(code, {x, y}));
    }
  }
}

void r3_moves(const PairCode& code, const std::vector<Diagram>& embeddings, const Sink& sink) {
  const Tables t(code);
  for (const auto& d : embeddings) {
    for (const auto& face : d.faces) {
      if (face.size() != 3) continue;
      Label ends[3][2];
      bool ok = true;
      for (int k = 0; k < 3; ++k) {
        ends[k][0] = face[k].segment;
        ends[k][1] = t.next(face[k].segment);
        if (t.crossing_of[ends[k][0]] == t.crossing_of[ends[k][1]]) ok = false;
      }
      if (!ok) continue;
      // at[k][j]: label of strand k at its crossing with strand j.
      Label at[3][3] = {};
      for (int k = 0; k < 3 && ok; ++k) {
        for (int j = 0; j < 3; ++j) {
          if (j == k) continue;
          int found = 0;
          for (Label a : ends[k])
            for (Label b : ends[j])
              if (t.crossing_of[a] == t.crossing_of[b]) at[k][j] = a, ++found;
          if (found != 1) ok = false;
        }
      }
      if (!ok) continue;
      bool legal = false;
      for (int k = 0; k < 3; ++k)
        if (t.over[at[k][(k + 1) % 3]] && t.over[at[k][(k + 2) % 3]]) legal = true;
      if (!legal) continue;

      std::vector<int> old_crossings;
      std::vector<Pair> added;
      for (int k = 0; k < 3; ++k) {
        const int j = (k + 1) % 3;
        const int u = (k + 2) % 3;
        old_crossings.push_back(t.crossing_of[at[k][j]]);
        const Label mine = at[k][u];
        const Label theirs = at[j][u];
        if (t.over[at[k][j]])
          added.push_back({mine, theirs});
        else
          added.push_back({theirs, mine});
      }
      std::vector<Pair> pairs;
      for (int c = 0; c < code.crossing_count(); ++c)
        if (std::find(old_crossings.begin(), old_crossings.end(), c) == old_crossings.end())
          pairs.push_back(code.pairs()[c]);
      pairs.insert(pairs.end(), added.begin(), added.end());
      PairCode out(std::move(pairs));
      if (is_realizable(out)) sink(out);
    }
  }
}

std::vector<PairCode> canonical_set(const std::function<void(const Sink&)>& produce) {
  std::set<PairCode> seen;
  produce([&](const PairCode& c) { seen.insert(canonical_form(c)); });
  return {seen.begin(), seen.end()};
}

}  // namespace

PairCode r1_insert(const PairCode& code, Label position, bool rising) {
  const int m = code.label_count();
  if (position < 1 || position > m + 1)
    throw CodeError("kink position " + std::to_string(position) + " outside 1.." + std::to_string(m + 1));
  auto shift = [&](Label l) { return l >= position ? l + 2 : l; };
  std::vector<Pair> pairs;
  for (const auto& p : code.pairs()) pairs.push_back({shift(p.over), shift(p.under)});
  if (rising)
    pairs.push_back({position, position + 1});
  else
    pairs.push_back({position + 1, position});
  return PairCode(std::move(pairs));
}

std::vector<PairCode> r1_neighbors(const PairCode& code, int max_crossings) {
  return canonical_set([&](const Sink& sink) {
    r1_additions(code, max_crossings, sink);
    r1_deletions(code, sink);
  });
}

std::vector<PairCode> r2_neighbors(const PairCode& code, int max_crossings) {
  const auto embeddings = all_embeddings(code);
  return canonical_set([&](const Sink& sink) {
    r2_additions(code, embeddings, max_crossings, sink);
    r2_deletions(code, embeddings, sink);
  });
}

std::vector<PairCode> r3_neighbors(const PairCode& code) {
  const auto embeddings = all_embeddings(code);
  return canonical_set([&](const Sink& sink) { r3_moves(code, embeddings, sink); });
}

std::vector<PairCode> all_neighbors(const PairCode& code, int max_crossings, bool with_mirror) {
  const auto embeddings = all_embeddings(code);
  return canonical_set([&](const Sink& sink) {
    r1_additions(code, max_crossings, sink);
    r1_deletions(code, sink);
    r2_additions(code, embeddings, max_crossings, sink);
    r2_deletions(code, embeddings, sink);
    r3_moves(code, embeddings, sink);
    if (with_mirror) sink(mirror(code));
  });
}

int ClassStore::insert(const PairCode& canonical_code) {
  const CodeKey key = pack(canonical_code);
  if (index_.count(key)) throw std::invalid_argument("code " + to_string(canonical_code) + " already stored");
  const int id = static_cast<int>(records_.size()) + 1;
  records_.push_back({canonical_code, id, id});
  index_.emplace(key, id);
  return id;
}

std::optional<int> ClassStore::find(const PairCode& canonical_code) const {
  auto it = index_.find(pack(canonical_code));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const ClassRecord& ClassStore::record(int permanent_id) const {
  if (permanent_id < 1 || permanent_id > static_cast<int>(records_.size()))
    throw std::out_of_range("no record " + std::to_string(permanent_id));
  return records_[permanent_id - 1];
}

int ClassStore::root(int permanent_id) const {
  int id = permanent_id;
  while (record(id).temporary_id != id) id = record(id).temporary_id;
  return id;
}

void ClassStore::merge(const std::vector<int>& permanent_ids) {
  if (permanent_ids.empty()) return;
  int low = root(permanent_ids.front());
  for (int id : permanent_ids) low = std::min(low, root(id));
  for (int id : permanent_ids) {
    const int r = root(id);
    records_[r - 1].temporary_id = low;
    records_[id - 1].temporary_id = low;
  }
}

bool ClassStore::is_representative(int permanent_id) const {
  return record(permanent_id).temporary_id == permanent_id;
}

std::vector<int> ClassStore::representatives() const {
  std::vector<int> out;
  for (const auto& r : records_)
    if (r.temporary_id == r.permanent_id) out.push_back(r.permanent_id);
  return out;
}

std::string ClassStore::serialize() const {
  std::string out;
  for (const auto& r : records_)
    out += to_string(r.canonical_code) + '\t' + std::to_string(r.permanent_id) + '\t' +
           std::to_string(r.temporary_id) + '\n';
  return out;
}

ClassStore ClassStore::parse(const std::string& text) {
  ClassStore store;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fail = [&](const std::string& why) {
      return StoreFormatError("class store line " + std::to_string(line_no) + ": " + why);
    };
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
      throw fail("expected three tab-separated fields");
    PairCode code;
    int perm = 0;
    int temp = 0;
    try {
      code = parse_code(line.substr(0, t1));
      std::size_t used = 0;
      const std::string p = line.substr(t1 + 1, t2 - t1 - 1);
      const std::string q = line.substr(t2 + 1);
      perm = std::stoi(p, &used);
      if (used != p.size()) throw fail("bad permanent id");
      temp = std::stoi(q, &used);
      if (used != q.size()) throw fail("bad temporary id");
    } catch (const StoreFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    if (perm != line_no) throw fail("permanent ids must be consecutive from 1");
    if (temp < 1 || temp > perm) throw fail("temporary id out of range");
    if (!is_canonical(code)) throw fail("code is not canonical");
    if (store.index_.count(pack(code))) throw fail("duplicate code");
    store.index_.emplace(pack(code), perm);
    store.records_.push_back({code, perm, temp});
  }
  return store;
}

ClassStore classify(const std::vector<PairCode>& codes, const ClassifyOptions& options, ClassifyStats* stats) {
  for (const auto& c : codes)
    if (c.crossing_count() > options.max_crossings)
      throw BoundTooSmall("input " + to_string(c) + " has more than " + std::to_string(options.max_crossings) +
                          " crossings");
  ClassStore store;
  ClassifyStats local;
  // Every code met by any search, mapped to a record of its class.
  std::unordered_map<CodeKey, int, CodeKeyHash> memo;

  for (std::size_t index = 0; index < codes.size(); ++index) {
    const PairCode& start = codes[index];
    ++local.inputs;
    const CodeKey start_key = pack(start);
    if (auto it = memo.find(start_key); it != memo.end()) {
      local.input_class.push_back(it->second);
      if (options.progress) options.progress(index + 1, codes.size(), memo.size());
      continue;
    }
    const int n = start.crossing_count();
    const int top = std::min(options.max_crossings, n + options.headroom.value_or(options.max_crossings));

    std::set<int> touched;
    int reached = n;
    std::unordered_set<CodeKey, CodeKeyHash> region{start_key};
    for (int ceiling = n; ceiling <= top && touched.empty(); ++ceiling) {
      reached = ceiling;
      std::unordered_set<CodeKey, CodeKeyHash> visited{start_key};
      std::vector<PairCode> layer{start};
      while (!layer.empty() && touched.empty()) {
        std::vector<PairCode> next_layer;
        for (const auto& code : layer) {
          ++local.expanded;
          for (const auto& nb : all_neighbors(code, ceiling, options.identify_mirrors)) {
            const CodeKey key = pack(nb);
            if (auto it = memo.find(key); it != memo.end()) {
              touched.insert(store.root(it->second));
              continue;
            }
            if (visited.insert(key).second) {
              region.insert(key);
              next_layer.push_back(nb);
            }
          }
        }
        layer = std::move(next_layer);
      }
    }

    int id;
    if (touched.empty()) {
      id = store.insert(start);
    } else {
      store.merge({touched.begin(), touched.end()});
      id = store.root(*touched.begin());
    }
    for (const auto& key : region) memo.emplace(key, id);
    local.input_class.push_back(id);
    if (options.trace) options.trace(start, reached, region.size(), touched.empty());
    if (options.progress) options.progress(index + 1, codes.size(), memo.size());
  }
  local.remembered = memo.size();
  for (int& id : local.input_class) id = store.root(id);
  if (stats) *stats = local;
  return store;
}

}  // namespace knottab
