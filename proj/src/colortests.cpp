#include "knottab/colortests.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace knottab {

namespace {

// 0-based working table: op[x][y] = x |> y.
using Table = std::vector<std::vector<int>>;

Table to_table(const ColorMatrix& m) {
  Table t(m.size(), std::vector<int>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) t[i][j] = m.at(i + 1, j + 1) - 1;
  return t;
}

ColorMatrix from_table(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> e;
  e.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.push_back(t[i][j] + 1);
  return ColorMatrix(n, std::move(e));
}

// Elements generating the table under its operation, chosen greedily.
std::vector<int> generators(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  int covered = 0;
  while (covered < n) {
    int a = 0;
    while (in[a]) ++a;
    gens.push_back(a);
    in[a] = 1;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (in[x]) members.push_back(x);
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = 0; q <= p; ++q) {
        for (int z : {t[members[p]][members[q]], t[members[q]][members[p]]}) {
          if (!in[z]) {
            in[z] = 1;
            members.push_back(z);
          }
        }
      }
    }
    covered = static_cast<int>(members.size());
  }
  return gens;
}

// Some bijection f with f(x |> y) = f(x) |>' f(y).
bool isomorphic(const Table& a, const Table& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  const auto gens = generators(a);
  std::vector<int> image(gens.size(), 0);
  while (true) {
    std::vector<int> f(n, -1);
    bool ok = true;
    for (std::size_t g = 0; g < gens.size() && ok; ++g) {
      if (f[gens[g]] >= 0 && f[gens[g]] != image[g]) ok = false;
      f[gens[g]] = image[g];
    }
    for (bool changed = ok; changed && ok;) {
      changed = false;
      for (int x = 0; x < n && ok; ++x) {
        if (f[x] < 0) continue;
        for (int y = 0; y < n && ok; ++y) {
          if (f[y] < 0) continue;
          const int z = a[x][y];
          const int w = b[f[x]][f[y]];
          if (f[z] < 0) {
            f[z] = w;
            changed = true;
          } else if (f[z] != w) {
            ok = false;
          }
        }
      }
    }
    if (ok) {
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n && ok; ++x) {
        if (f[x] < 0 || hit[f[x]]) ok = false;
        else hit[f[x]] = 1;
      }
    }
    if (ok) return true;
    std::size_t g = 0;
    while (g < image.size() && ++image[g] == n) image[g++] = 0;
    if (g == image.size()) return false;
  }
}

// Calls `emit` for every permutation of `points` whose cycle lengths are the
// multiset `lengths` (count per length); perm is written in place.
void permutations_of_type(const std::vector<int>& points, std::vector<int>& counts, std::vector<int>& perm,
                          std::vector<char>& used, const std::function<void()>& emit) {
  int a = -1;
  for (int p : points)
    if (!used[p]) {
      a = p;
      break;
    }
  if (a < 0) {
    emit();
    return;
  }
  used[a] = 1;
  std::vector<int> cycle{a};
  std::function<void(int)> grow = [&](int length) {
    if (static_cast<int>(cycle.size()) == length) {
      for (int i = 0; i < length; ++i) perm[cycle[i]] = cycle[(i + 1) % length];
      --counts[length];
      permutations_of_type(points, counts, perm, used, emit);
      ++counts[length];
      return;
    }
    for (int p : points) {
      if (used[p]) continue;
      used[p] = 1;
      cycle.push_back(p);
      grow(length);
      cycle.pop_back();
      used[p] = 0;
    }
  };
  for (int length = 1; length < static_cast<int>(counts.size()); ++length)
    if (counts[length] > 0) grow(length);
  used[a] = 0;
}

// Connected tables whose right translations all share one cycle type.
class TestSearch {
 public:
  TestSearch(int n, std::vector<int> counts, std::function<void(const Table&)> found)
      : n_(n), counts_(std::move(counts)), found_(std::move(found)), columns_(n) {}

  void run(std::vector<int> first_column) {
    columns_[0] = std::move(first_column);
    search();
  }

 private:
  // Enforces column(x |> z) = column(z) column(x) column(z)^-1 until stable.
  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (int z = 0; z < n_; ++z) {
        if (columns_[z].empty()) continue;
        const auto& rz = columns_[z];
        for (int y = 0; y < n_; ++y) {
          if (columns_[y].empty()) continue;
          const auto& ry = columns_[y];
          std::vector<int> conj(n_);
          for (int x = 0; x < n_; ++x) conj[rz[x]] = rz[ry[x]];
          const int w = rz[y];
          if (columns_[w].empty()) {
            columns_[w] = std::move(conj);
            changed = true;
          } else if (columns_[w] != conj) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search() {
    const auto saved = columns_;
    if (!propagate()) {
      columns_ = saved;
      return;
    }
    int y = 0;
    while (y < n_ && !columns_[y].empty()) ++y;
    if (y == n_) {
      Table t(n_, std::vector<int>(n_));
      for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z) t[x][z] = columns_[z][x];
      found_(t);
      columns_ = saved;
      return;
    }
    std::vector<int> points;
    for (int p = 0; p < n_; ++p)
      if (p != y) points.push_back(p);
    auto counts = counts_;
    --counts[1];
    std::vector<int> perm(n_);
    perm[y] = y;
    std::vector<char> used(n_, 0);
    const auto here = columns_;
    permutations_of_type(points, counts, perm, used, [&] {
      columns_ = here;
      columns_[y] = perm;
      search();
    });
    columns_ = saved;
  }

  int n_;
  std::vector<int> counts_;
  std::function<void(const Table&)> found_;
  std::vector<std::vector<int>> columns_;
};

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

ColorMatrix::ColorMatrix(int n, std::vector<int> row_major) : n_(n), entries_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("a color test needs at least one color");
  if (static_cast<int>(entries_.size()) != n * n)
    throw std::invalid_argument("expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  for (int v : entries_)
    if (v < 1 || v > n) throw std::invalid_argument("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

bool validate(const ColorMatrix& m) {
  const int n = m.size();
  for (int i = 1; i <= n; ++i)
    if (m.at(i, i) != i) return false;
  for (int j = 1; j <= n; ++j) {
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (seen[m.at(i, j)]) return false;
      seen[m.at(i, j)] = 1;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        if (m.at(m.at(l, j), m.at(i, j)) != m.at(m.at(l, i), j)) return false;
  return true;
}

bool irreducible(const ColorMatrix& m) {
  const int n = m.size();
  for (int start = 1; start <= n; ++start) {
    std::vector<char> in(n + 1, 0);
    std::vector<int> stack{start};
    in[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 1; j <= n; ++j) {
        const int k = m.at(i, j);
        if (!in[k]) {
          in[k] = 1;
          ++reached;
          stack.push_back(k);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

ColorMatrix mirror(const ColorMatrix& m) {
  const int n = m.size();
  std::vector<int> e(n * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int& slot = e[(m.at(i, j) - 1) * n + (j - 1)];
      if (slot != 0) throw std::invalid_argument("mirror needs every column to be a bijection");
      slot = i;
    }
  return ColorMatrix(n, std::move(e));
}

ColorMatrix permuted(const ColorMatrix& m, const std::vector<int>& perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n) throw SizeMismatch("permutation size differs from test size");
  std::vector<int> e(n * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e[(perm[i - 1] - 1) * n + (perm[j - 1] - 1)] = perm[m.at(i, j) - 1];
  return ColorMatrix(n, std::move(e));
}

bool same_test(const ColorMatrix& a, const ColorMatrix& b) {
  if (a.size() != b.size())
    throw SizeMismatch("tests with " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " colors");
  const Table ta = to_table(a);
  return isomorphic(ta, to_table(b)) || isomorphic(ta, to_table(mirror(b)));
}

ColorMatrix canonical_test(const ColorMatrix& m) {
  const int n = m.size();
  ColorMatrix best = m;
  for (const ColorMatrix& base : {m, mirror(m)}) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      ColorMatrix c = permuted(base, perm);
      if (c.entries() < best.entries()) best = std::move(c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

std::vector<ColorMatrix> enumerate_tests(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_tests needs n >= 1");
  std::vector<Table> reps;
  std::vector<std::vector<int>> types;
  std::vector<int> current;
  partitions(n, n, current, types);
  for (const auto& type : types) {
    // Every column fixes its own color, so some part must be 1.
    if (type.back() != 1) continue;
    std::vector<int> counts(n + 1, 0);
    for (int p : type) ++counts[p];
    // First column: 0 fixed, then cycles on consecutive colors.
    std::vector<int> first(n);
    first[0] = 0;
    int next = 1;
    bool skipped_fixed = false;
    for (int p : type) {
      if (p == 1 && !skipped_fixed) {
        skipped_fixed = true;
        continue;
      }
      for (int i = 0; i < p; ++i) first[next + i] = next + (i + 1) % p;
      next += p;
    }
    TestSearch search(n, counts, [&](const Table& t) {
      const ColorMatrix m = from_table(t);
      if (!irreducible(m) || !validate(m)) return;
      const Table dual = to_table(mirror(m));
      for (const auto& r : reps)
        if (isomorphic(r, t) || isomorphic(r, dual)) return;
      reps.push_back(t);
    });
    search.run(first);
  }
  std::vector<ColorMatrix> out;
  for (const auto& r : reps) out.push_back(canonical_test(from_table(r)));
  std::sort(out.begin(), out.end());
  return out;
}

ColorMatrix affine(int n, int k) {
  if (n < 2) throw std::invalid_argument("affine tests need n >= 2");
  if (std::gcd(k, n) != 1 || std::gcd(k + 1, n) != 1)
    throw GcdViolation("affine(" + std::to_string(n) + "," + std::to_string(k) + ") needs gcd(k,n) = gcd(k+1,n) = 1");
  std::vector<int> e;
  e.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const long long v = (static_cast<long long>(k + 1) * j - static_cast<long long>(k) * i) % n;
      e.push_back(static_cast<int>((v + n) % n == 0 ? n : (v + n) % n));
    }
  return ColorMatrix(n, std::move(e));
}

ColorMatrix conjugation(int m, const std::vector<int>& partition) {
  if (m < 1 || m > 9) throw std::invalid_argument("conjugation tests are limited to 1..9 symbols");
  if (std::accumulate(partition.begin(), partition.end(), 0) != m ||
      std::any_of(partition.begin(), partition.end(), [](int p) { return p < 1; }) ||
      !std::is_sorted(partition.rbegin(), partition.rend()))
    throw std::invalid_argument("partition must be non-increasing positive parts summing to m");
  std::vector<int> want = partition;
  std::vector<std::vector<int>> members;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<char> seen(m, 0);
    std::vector<int> type;
    for (int s = 0; s < m; ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (int x = s; !seen[x]; x = perm[x]) seen[x] = 1, ++len;
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    if (type == want) members.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int n = static_cast<int>(members.size());
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& g = members[j];
      const auto& h = members[i];
      // (g h g^-1)(g(x)) = g(h(x)).
      std::vector<int> c(m);
      for (int x = 0; x < m; ++x) c[g[x]] = g[h[x]];
      const auto it = std::lower_bound(members.begin(), members.end(), c);
      e.push_back(static_cast<int>(it - members.begin()) + 1);
    }
  }
  return ColorMatrix(n, std::move(e));
}

std::uint64_t count_colorings(const Diagram& diagram, const ColorMatrix& m) {
  const int colors = m.size();
  const int arcs = static_cast<int>(diagram.arcs.size());
  const int n = diagram.crossing_count();
  if (n == 0) return static_cast<std::uint64_t>(colors);
  const Table op = to_table(m);
  const Table inv = to_table(mirror(m));

  // Branch first on arcs that act as overpasses most often.
  std::vector<int> order(arcs);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> weight(arcs, 0);
  for (const auto& at : diagram.incidence) ++weight[at.over_arc];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight[a] > weight[b]; });

  std::vector<int> color(arcs, -1);
  std::function<std::uint64_t()> count = [&]() -> std::uint64_t {
    const auto saved = color;
    bool ok = true;
    for (bool changed = true; changed && ok;) {
      changed = false;
      for (int c = 0; c < n && ok; ++c) {
        const auto& at = diagram.incidence[c];
        const int over = color[at.over_arc];
        if (over < 0) continue;
        // Positive: out = in |> over; negative: in = out |> over.
        const int src = diagram.signs[c] > 0 ? at.in_arc : at.out_arc;
        const int dst = diagram.signs[c] > 0 ? at.out_arc : at.in_arc;
        if (color[src] >= 0) {
          const int want = op[color[src]][over];
          if (color[dst] < 0) {
            color[dst] = want;
            changed = true;
          } else if (color[dst] != want) {
            ok = false;
          }
        } else if (color[dst] >= 0) {
          color[src] = inv[color[dst]][over];
          changed = true;
        }
      }
    }
    std::uint64_t total = 0;
    if (ok) {
      int free_arc = -1;
      for (int a : order)
        if (color[a] < 0) {
          free_arc = a;
          break;
        }
      if (free_arc < 0) {
        total = 1;
      } else {
        const auto here = color;
        for (int k = 0; k < colors; ++k) {
          color = here;
          color[free_arc] = k;
          total += count();
        }
      }
    }
    color = saved;
    return total;
  };
  return count();
}

InvariantVector invariant_vector(const Diagram& diagram, const std::vector<ColorMatrix>& suite) {
  InvariantVector v;
  for (const auto& m : suite) {
    const std::uint64_t a = count_colorings(diagram, m);
    const std::uint64_t b = count_colorings(diagram, mirror(m));
    v.counts.emplace_back(std::min(a, b), std::max(a, b));
  }
  return v;
}

std::string to_string(const ColorMatrix& m) {
  std::string out = "n=" + std::to_string(m.size()) + ";";
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) out += '|';
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ',';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

ColorMatrix parse_matrix(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("bad color test text '" + std::string(text) + "'"); };
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw fail();
    return v;
  };
  if (text.substr(0, 2) != "n=") throw fail();
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw fail();
  const int n = number(text.substr(2, semi - 2));
  if (n < 1) throw fail();
  std::vector<int> entries;
  std::string_view body = text.substr(semi + 1);
  int rows = 0;
  while (true) {
    const auto bar = std::min(body.find('|'), body.size());
    std::string_view row = body.substr(0, bar);
    int cols = 0;
    while (true) {
      const auto comma = std::min(row.find(','), row.size());
      entries.push_back(number(row.substr(0, comma)));
      ++cols;
      if (comma == row.size()) break;
      row = row.substr(comma + 1);
    }
    if (cols != n) throw fail();
    ++rows;
    if (bar == body.size()) break;
    body = body.substr(bar + 1);
  }
  if (rows != n) throw fail();
  try {
    return ColorMatrix(n, std::move(entries));
  } catch (const std::invalid_argument&) {
    throw fail();
  }
}

std::string to_string(const InvariantVector& v) {
  std::string out;
  for (const auto& [a, b] : v.counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + '/' + std::to_string(b);
  }
  if (v.polynomial) {
    if (!out.empty()) out += ' ';
    out += "p=" + to_string(*v.polynomial);
  }
  return out;
}

InvariantVector parse_invariant_vector(std::string_view text) {
  InvariantVector v;
  std::istringstream in{std::string(text)};
  std::string token;
  auto fail = [&] { return std::invalid_argument("bad invariant vector '" + std::string(text) + "'"); };
  while (in >> token) {
    if (v.polynomial) throw fail();
    if (token.rfind("p=", 0) == 0) {
      v.polynomial = parse_polynomial(std::string_view(token).substr(2));
      continue;
    }
    const auto slash = token.find('/');
    if (slash == std::string::npos) throw fail();
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const char* s = token.data();
    auto r1 = std::from_chars(s, s + slash, a);
    auto r2 = std::from_chars(s + slash + 1, s + token.size(), b);
    if (r1.ec != std::errc() || r1.ptr != s + slash || r2.ec != std::errc() || r2.ptr != s + token.size() ||
        slash == 0 || slash + 1 == token.size() || a > b)
      throw fail();
    v.counts.emplace_back(a, b);
  }
  return v;
}

}  // namespace knottab
