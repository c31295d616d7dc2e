#include "knottab/code.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace knottab {

namespace {

// Maps any integer into 1..m with the same residue mod m.
inline int mod1(int x, int m) { return ((x - 1) % m + m) % m + 1; }

void check_labels(const std::vector<Pair>& pairs) {
  const int m = 2 * static_cast<int>(pairs.size());
  if (static_cast<int>(pairs.size()) > kMaxCrossings)
    throw CodeError("code has more than " + std::to_string(kMaxCrossings) + " crossings");
  std::vector<bool> seen(m + 1, false);
  for (const auto& p : pairs) {
    for (Label l : {p.over, p.under}) {
      if (l < 1 || l > m) throw CodeError("label " + std::to_string(l) + " outside 1.." + std::to_string(m));
      if (seen[l]) throw CodeError("label " + std::to_string(l) + " used twice");
      seen[l] = true;
    }
  }
}

struct LabelTables {
  int m = 0;
  std::vector<Label> partner;
  std::vector<char> over;

  explicit LabelTables(const PairCode& code) : m(code.label_count()), partner(m + 1, 0), over(m + 1, 0) {
    for (const auto& p : code.pairs()) {
      partner[p.over] = p.under;
      partner[p.under] = p.over;
      over[p.over] = 1;
    }
  }
};

// Compares the flat sequence of relabel(code, k, eps) against `best`.
// Returns <0, 0, >0; writes the candidate into `out` only when asked.
int compare_relabeling(const LabelTables& t, int k, int eps, const std::vector<Label>& best) {
  std::size_t pos = 0;
  for (int y = 1; y <= t.m; ++y) {
    const int a = eps > 0 ? mod1(y - k, t.m) : mod1(k - y, t.m);
    if (!t.over[a]) continue;
    const int u = mod1(k + eps * t.partner[a], t.m);
    if (y != best[pos]) return y < best[pos] ? -1 : 1;
    ++pos;
    if (u != best[pos]) return u < best[pos] ? -1 : 1;
    ++pos;
  }
  return 0;
}

std::vector<Label> flat_relabeling(const LabelTables& t, int k, int eps) {
  std::vector<Label> out;
  out.reserve(t.m);
  for (int y = 1; y <= t.m; ++y) {
    const int a = eps > 0 ? mod1(y - k, t.m) : mod1(k - y, t.m);
    if (!t.over[a]) continue;
    out.push_back(y);
    out.push_back(mod1(k + eps * t.partner[a], t.m));
  }
  return out;
}

PairCode from_flat(const std::vector<Label>& flat) {
  std::vector<Pair> pairs;
  pairs.reserve(flat.size() / 2);
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) pairs.push_back({flat[i], flat[i + 1]});
  return PairCode(std::move(pairs));
}

}  // namespace

PairCode::PairCode(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  check_labels(pairs_);
  std::sort(pairs_.begin(), pairs_.end());
}

std::vector<Label> PairCode::flat() const {
  std::vector<Label> out;
  out.reserve(2 * pairs_.size());
  for (const auto& p : pairs_) {
    out.push_back(p.over);
    out.push_back(p.under);
  }
  return out;
}

std::vector<Label> PairCode::partners() const {
  std::vector<Label> out(label_count() + 1, 0);
  for (const auto& p : pairs_) {
    out[p.over] = p.under;
    out[p.under] = p.over;
  }
  return out;
}

std::vector<bool> PairCode::over_flags() const {
  std::vector<bool> out(label_count() + 1, false);
  for (const auto& p : pairs_) out[p.over] = true;
  return out;
}

std::strong_ordering operator<=>(const PairCode& a, const PairCode& b) {
  if (auto c = a.crossing_count() <=> b.crossing_count(); c != 0) return c;
  return a.pairs_ <=> b.pairs_;
}

CodeKey pack(const PairCode& code) {
  unsigned __int128 bits = static_cast<unsigned>(code.crossing_count());
  int shift = 5;
  const auto over = code.over_flags();
  for (int l = 1; l <= code.label_count(); ++l, ++shift)
    if (over[l]) bits |= static_cast<unsigned __int128>(1) << shift;
  for (const auto& p : code.pairs()) {
    bits |= static_cast<unsigned __int128>(p.under - 1) << shift;
    shift += 5;
  }
  return {static_cast<std::uint64_t>(bits), static_cast<std::uint64_t>(bits >> 64)};
}

PairCode unpack(const CodeKey& key) {
  const unsigned __int128 bits = (static_cast<unsigned __int128>(key.hi) << 64) | key.lo;
  const int n = static_cast<int>(bits & 31u);
  if (n > kMaxCrossings) throw CodeError("corrupt code key");
  int shift = 5;
  std::vector<Label> overs;
  for (int l = 1; l <= 2 * n; ++l, ++shift)
    if ((bits >> shift) & 1u) overs.push_back(l);
  if (static_cast<int>(overs.size()) != n) throw CodeError("corrupt code key");
  std::vector<Pair> pairs;
  for (Label o : overs) {
    pairs.push_back({o, static_cast<Label>((bits >> shift) & 31u) + 1});
    shift += 5;
  }
  return PairCode(std::move(pairs));
}

bool parity_ok(const PairCode& code) {
  return std::all_of(code.pairs().begin(), code.pairs().end(),
                     [](const Pair& p) { return (p.over + p.under) % 2 == 1; });
}

void enumerate_codes(int n, bool canonical_only, const std::function<void(const PairCode&)>& sink) {
  if (n < 0) throw CodeError("negative crossing count");
  if (n > kMaxCrossings) throw CodeError("crossing count above supported maximum");
  const int m = 2 * n;
  std::vector<char> used(m + 2, 0);
  std::vector<Pair> chosen;
  chosen.reserve(n);

  // Pairs are produced in increasing over-label order, which makes the DFS
  // order coincide with lexicographic order of the flat sequence.
  std::function<void(int)> extend = [&](int last_over) {
    if (static_cast<int>(chosen.size()) == n) {
      PairCode code(chosen);
      if (!canonical_only || is_canonical(code)) sink(code);
      return;
    }
    const int remaining = n - static_cast<int>(chosen.size());
    int free_below = 0;
    for (int l = 1; l <= last_over; ++l) free_below += used[l] ? 0 : 1;
    for (int o = last_over + 1; o <= m; ++o) {
      if (used[o]) continue;
      // Every free label below o must become the under-label of this or a later pair.
      if (free_below > remaining) break;
      used[o] = 1;
      for (int u = 1; u <= m; ++u) {
        if (used[u] || (u + o) % 2 == 0) continue;
        used[u] = 1;
        chosen.push_back({o, u});
        extend(o);
        chosen.pop_back();
        used[u] = 0;
      }
      used[o] = 0;
      ++free_below;
    }
  };
  extend(0);
}

std::vector<PairCode> enumerate_codes(int n, bool canonical_only) {
  std::vector<PairCode> out;
  enumerate_codes(n, canonical_only, [&](const PairCode& c) { out.push_back(c); });
  return out;
}

PairCode relabel(const PairCode& code, int k, int eps) {
  if (eps != 1 && eps != -1) throw CodeError("orientation must be +1 or -1");
  const int m = code.label_count();
  if (m == 0) return code;
  std::vector<Pair> pairs;
  pairs.reserve(code.pairs().size());
  for (const auto& p : code.pairs()) pairs.push_back({mod1(k + eps * p.over, m), mod1(k + eps * p.under, m)});
  return PairCode(std::move(pairs));
}

PairCode canonical_form(const PairCode& code) {
  const int m = code.label_count();
  if (m == 0) return code;
  const LabelTables t(code);
  std::vector<Label> best = code.flat();
  for (int eps : {1, -1})
    for (int k = 0; k < m; ++k)
      if (compare_relabeling(t, k, eps, best) < 0) best = flat_relabeling(t, k, eps);
  return from_flat(best);
}

bool is_canonical(const PairCode& code) {
  const int m = code.label_count();
  if (m == 0) return true;
  const LabelTables t(code);
  const std::vector<Label> own = code.flat();
  for (int eps : {1, -1})
    for (int k = 0; k < m; ++k)
      if (compare_relabeling(t, k, eps, own) < 0) return false;
  return true;
}

PairCode mirror(const PairCode& code) {
  std::vector<Pair> pairs;
  pairs.reserve(code.pairs().size());
  for (const auto& p : code.pairs()) pairs.push_back({p.under, p.over});
  return PairCode(std::move(pairs));
}

bool is_composite_diagram(const PairCode& code) {
  const int m = code.label_count();
  if (m < 4) return false;
  const auto partner = code.partners();
  std::vector<char> inside(m + 1, 0);
  for (int start = 1; start <= m; ++start) {
    std::fill(inside.begin(), inside.end(), 0);
    int closed = 0;
    for (int len = 1; len <= m - 2; ++len) {
      const int l = mod1(start + len - 1, m);
      inside[l] = 1;
      if (inside[partner[l]]) ++closed;
      if (len % 2 == 0 && 2 * closed == len) return true;
    }
  }
  return false;
}

std::string to_string(const PairCode& code) {
  std::string out = std::to_string(code.crossing_count()) + ";";
  for (const auto& p : code.pairs()) out += "(" + std::to_string(p.over) + "," + std::to_string(p.under) + ")";
  return out;
}

namespace {

int read_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) throw CodeError("expected a number in code '" + std::string(text) + "'");
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw CodeError(std::string("expected '") + c + "' in code '" + std::string(text) + "'");
  ++pos;
}

}  // namespace

PairCode parse_code(std::string_view text) {
  std::size_t pos = 0;
  const int n = read_int(text, pos);
  expect(text, pos, ';');
  std::vector<Pair> pairs;
  while (pos < text.size()) {
    expect(text, pos, '(');
    const int o = read_int(text, pos);
    expect(text, pos, ',');
    const int u = read_int(text, pos);
    expect(text, pos, ')');
    pairs.push_back({o, u});
  }
  if (static_cast<int>(pairs.size()) != n)
    throw CodeError("code '" + std::string(text) + "' declares " + std::to_string(n) + " crossings");
  return PairCode(std::move(pairs));
}

}  // namespace knottab
