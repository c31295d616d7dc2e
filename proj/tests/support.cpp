#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using knottab::LaurentPolynomial;
using knottab::PairCode;

std::vector<int> dowker_code(const PairCode& code) {
  const int n = code.crossing_count();
  std::vector<int> dt(n, 0);
  for (const auto& p : code.pairs()) {
    const int odd = p.over % 2 == 1 ? p.over : p.under;
    const int even = p.over % 2 == 1 ? p.under : p.over;
    dt[(odd - 1) / 2] = even == p.over ? -even : even;
  }
  return dt;
}

bool dowker_realizable(const std::vector<int>& dt) {
  const int n = static_cast<int>(dt.size());
  if (n == 0) return true;
  const int m = 2 * n;
  // Crossing c joins label 2c+1 with |dt[c]|.
  std::vector<int> partner(m + 1, 0);
  for (int c = 0; c < n; ++c) {
    const int a = 2 * c + 1;
    const int b = std::abs(dt[c]);
    if (b < 1 || b > m || b % 2 != 0 || partner[b] != 0) return false;
    partner[a] = b;
    partner[b] = a;
  }
  // Darts: (label, leaving) where leaving means the dart heads along the
  // curve away from the label.
  auto dart = [](int label, bool leaving) { return 2 * (label - 1) + (leaving ? 0 : 1); };
  auto next = [&](int l) { return l % m + 1; };
  auto prev = [&](int l) { return (l + m - 2) % m + 1; };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> rotate(2 * m, -1);
    for (int c = 0; c < n; ++c) {
      const int a = 2 * c + 1;
      const int b = partner[a];
      int order[4];
      if (mask >> c & 1)
        order[0] = dart(a, true), order[1] = dart(b, true), order[2] = dart(a, false), order[3] = dart(b, false);
      else
        order[0] = dart(a, true), order[1] = dart(b, false), order[2] = dart(a, false), order[3] = dart(b, true);
      for (int i = 0; i < 4; ++i) rotate[order[i]] = order[(i + 1) % 4];
    }
    // The edge leaving label l along the curve arrives at next(l).
    auto twin = [&](int d) {
      const int label = d / 2 + 1;
      return d % 2 == 0 ? dart(next(label), false) : dart(prev(label), true);
    };
    std::vector<char> seen(2 * m, 0);
    int faces = 0;
    for (int s = 0; s < 2 * m; ++s) {
      if (seen[s]) continue;
      ++faces;
      for (int d = s; !seen[d]; d = rotate[twin(d)]) seen[d] = 1;
    }
    if (faces == n + 2) return true;
  }
  return false;
}

PairCode brute_canonical(const PairCode& code) {
  const int m = code.label_count();
  if (m == 0) return code;
  PairCode best = code;
  for (int k = 0; k < m; ++k)
    for (int eps : {1, -1}) {
      PairCode c = knottab::relabel(code, k, eps);
      if (c.flat() < best.flat()) best = c;
    }
  return best;
}

LaurentPolynomial leibniz_det(const std::vector<std::vector<LaurentPolynomial>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    LaurentPolynomial term = LaurentPolynomial::constant(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t brute_colorings(const knottab::Diagram& d, const knottab::ColorMatrix& m) {
  const int arcs = static_cast<int>(d.arcs.size());
  const int k = m.size();
  std::vector<int> color(arcs, 1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int c = 0; c < d.crossing_count() && ok; ++c) {
      const auto& at = d.incidence[c];
      if (d.signs[c] > 0)
        ok = color[at.out_arc] == m.at(color[at.in_arc], color[at.over_arc]);
      else
        ok = color[at.in_arc] == m.at(color[at.out_arc], color[at.over_arc]);
    }
    if (ok) ++count;
    int i = 0;
    while (i < arcs && ++color[i] > k) color[i++] = 1;
    if (i == arcs) break;
  }
  return count;
}

PairCode random_code(int n, std::mt19937& rng) {
  std::vector<int> evens(n);
  for (int i = 0; i < n; ++i) evens[i] = 2 * (i + 1);
  std::shuffle(evens.begin(), evens.end(), rng);
  std::vector<knottab::Pair> pairs;
  for (int i = 0; i < n; ++i) {
    const int odd = 2 * i + 1;
    if (rng() & 1)
      pairs.push_back({odd, evens[i]});
    else
      pairs.push_back({evens[i], odd});
  }
  return PairCode(std::move(pairs));
}

PairCode random_realizable(int n, std::mt19937& rng) {
  while (true) {
    PairCode c = random_code(n, rng);
    if (knottab::is_realizable(c)) return c;
  }
}

}  // namespace oracle
