#include "knottab/realize.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace knottab {

namespace {

struct Geometry {
  int n = 0;
  int m = 0;
  std::vector<Label> partner;
  std::vector<char> over;
  std::vector<int> crossing_of;
  std::vector<Label> first;   // smaller label of crossing c
  std::vector<Label> second;  // larger label of crossing c

  explicit Geometry(const PairCode& code)
      : n(code.crossing_count()), m(code.label_count()), partner(code.partners()), over(m + 1, 0),
        crossing_of(m + 1, -1), first(n), second(n) {
    for (int c = 0; c < n; ++c) {
      const auto& p = code.pairs()[c];
      over[p.over] = 1;
      crossing_of[p.over] = c;
      crossing_of[p.under] = c;
      first[c] = std::min(p.over, p.under);
      second[c] = std::max(p.over, p.under);
    }
  }

  Label next(Label l) const { return l % m + 1; }
  Label prev(Label l) const { return (l + m - 2) % m + 1; }
};

inline bool interlaced(Label a1, Label b1, Label a2, Label b2) {
  return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

// Half-edges: 2(l-1) leaves label l along segment l, 2(l-1)+1 arrives at
// label l along segment l-1.
inline int out_half(Label l) { return 2 * (l - 1); }
inline int in_half(Label l) { return 2 * (l - 1) + 1; }

std::vector<Face> trace_faces(const Geometry& g, const std::vector<int>& turning) {
  if (g.n == 0) return {Face{{0, true}}, Face{{0, false}}};
  const int halves = 2 * g.m;
  std::vector<int> succ(halves, -1);
  for (int c = 0; c < g.n; ++c) {
    const Label a = g.first[c];
    const Label b = g.second[c];
    int rot[4];
    if (turning[c] > 0) {
      rot[0] = out_half(a), rot[1] = out_half(b), rot[2] = in_half(a), rot[3] = in_half(b);
    } else {
      rot[0] = out_half(a), rot[1] = in_half(b), rot[2] = in_half(a), rot[3] = out_half(b);
    }
    for (int i = 0; i < 4; ++i) succ[rot[i]] = rot[(i + 1) % 4];
  }
  std::vector<char> seen(halves, 0);
  std::vector<Face> faces;
  for (int start = 0; start < halves; ++start) {
    if (seen[start]) continue;
    Face face;
    int h = start;
    while (!seen[h]) {
      seen[h] = 1;
      const Label l = h / 2 + 1;
      int far;
      if (h % 2 == 0) {
        face.push_back({l, true});
        far = in_half(g.next(l));
      } else {
        face.push_back({g.prev(l), false});
        far = out_half(g.prev(l));
      }
      h = succ[far];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

// Orientation of each crossing relative to the first crossing of its
// interlacement component, or nullopt when the relations are inconsistent.
struct Orientation {
  std::vector<int> relative;
  std::vector<int> component;
  int components = 0;
};

std::optional<Orientation> solve_orientation(const Geometry& g) {
  const int n = g.n;
  std::vector<std::vector<char>> inter(n, std::vector<char>(n, 0));
  for (int c = 0; c < n; ++c)
    for (int d = c + 1; d < n; ++d)
      inter[c][d] = inter[d][c] = interlaced(g.first[c], g.second[c], g.first[d], g.second[d]) ? 1 : 0;

  Orientation o;
  o.relative.assign(n, 0);
  o.component.assign(n, -1);
  std::vector<int> order(n);
  for (int c = 0; c < n; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return g.first[x] < g.first[y]; });

  std::vector<int> stack;
  for (int root : order) {
    if (o.component[root] >= 0) continue;
    const int comp = o.components++;
    o.component[root] = comp;
    o.relative[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int d = 0; d < n; ++d) {
        if (!inter[c][d]) continue;
        int common = 0;
        for (int e = 0; e < n; ++e) common += (inter[c][e] && inter[d][e]) ? 1 : 0;
        const int lo = g.first[c] < g.first[d] ? c : d;
        const int hi = lo == c ? d : c;
        const int gap = g.first[hi] - g.first[lo];
        const int product = (common + gap) % 2 == 0 ? -1 : 1;
        const int want = o.relative[c] * product;
        if (o.component[d] < 0) {
          o.component[d] = comp;
          o.relative[d] = want;
          stack.push_back(d);
        } else if (o.relative[d] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

Diagram assemble(const PairCode& code, const Geometry& g, std::vector<int> turning, std::vector<Face> faces) {
  Diagram d;
  d.code = code;
  d.crossing_of = g.crossing_of;
  d.faces = std::move(faces);
  d.signs.resize(g.n);
  for (int c = 0; c < g.n; ++c) d.signs[c] = g.over[g.first[c]] ? turning[c] : -turning[c];
  d.turning = std::move(turning);

  if (g.n == 0) {
    d.arcs.push_back({0, 0});
    return d;
  }
  std::vector<Label> unders;
  for (Label l = 1; l <= g.m; ++l)
    if (!g.over[l]) unders.push_back(l);
  const int n = g.n;
  std::vector<int> arc_index(g.m + 1, -1);
  for (int a = 0; a < n; ++a) {
    d.arcs.push_back({unders[a], unders[(a + 1) % n]});
    arc_index[unders[a]] = a;
  }
  // Labels strictly inside an arc belong to the arc that started last.
  std::vector<int> arc_of(g.m + 1, -1);
  int current = n - 1;
  for (Label l = 1; l <= g.m; ++l) {
    if (!g.over[l]) current = arc_index[l];
    arc_of[l] = current;
  }
  d.incidence.resize(n);
  for (int c = 0; c < n; ++c) {
    const auto& p = code.pairs()[c];
    const int out = arc_index[p.under];
    d.incidence[c] = {(out + n - 1) % n, out, arc_of[p.over]};
  }
  return d;
}

struct Embedder {
  const PairCode& code;
  Geometry g;
  Orientation orient;
  std::vector<int> base_flip;  // per component, applied under the sign convention

  Embedder(const PairCode& c, Orientation o) : code(c), g(c), orient(std::move(o)) {
    base_flip.assign(orient.components, 0);
    std::vector<int> lowest(orient.components, -1);
    for (int c2 = 0; c2 < g.n; ++c2) {
      const int comp = orient.component[c2];
      if (lowest[comp] < 0 || g.first[c2] < g.first[lowest[comp]]) lowest[comp] = c2;
    }
    for (int comp = 0; comp < orient.components; ++comp) {
      const int c2 = lowest[comp];
      const int sign = g.over[g.first[c2]] ? orient.relative[c2] : -orient.relative[c2];
      base_flip[comp] = sign > 0 ? 1 : -1;
    }
  }

  std::optional<Diagram> build(const std::vector<int>& flip) const {
    std::vector<int> turning(g.n);
    for (int c = 0; c < g.n; ++c) turning[c] = orient.relative[c] * flip[orient.component[c]];
    auto faces = trace_faces(g, turning);
    if (static_cast<int>(faces.size()) != g.n + 2) return std::nullopt;
    return assemble(code, g, std::move(turning), std::move(faces));
  }
};

std::optional<Embedder> make_embedder(const PairCode& code) {
  if (!parity_ok(code)) return std::nullopt;
  Geometry g(code);
  auto orient = solve_orientation(g);
  if (!orient) return std::nullopt;
  return Embedder(code, std::move(*orient));
}

}  // namespace

bool parity_check(const PairCode& code) { return parity_ok(code); }

std::vector<Loop> enumerate_loops(const PairCode& code) {
  if (code.crossing_count() == 0) return {Loop{}};
  if (code.label_count() > 64) throw CodeError("too many segments for loop enumeration");
  const Geometry g(code);
  std::vector<Loop> loops;
  std::vector<LoopStep> steps;

  struct State {
    std::uint64_t used, turned, s1, s2;
  };
  for (Label s0 = 1; s0 <= g.m; ++s0) {
    auto walk = [&](auto& self, Label seg, bool fwd, State st) -> void {
      const Label lab = fwd ? g.next(seg) : seg;
      const int c = g.crossing_of[lab];
      const std::uint64_t cbit = std::uint64_t{1} << c;
      const bool first_strand = lab == g.first[c];
      struct Option {
        Label seg;
        bool fwd;
        bool turn;
      };
      const Label o = g.partner[lab];
      const Option options[3] = {
          {fwd ? lab : g.prev(lab), fwd, false},
          {o, true, true},
          {g.prev(o), false, true},
      };
      for (const auto& opt : options) {
        State nx = st;
        if (opt.turn) {
          if ((st.turned | st.s1 | st.s2) & cbit) continue;
          nx.turned |= cbit;
        } else {
          if (st.turned & cbit) continue;
          (first_strand ? nx.s1 : nx.s2) |= cbit;
        }
        steps.back().turn = opt.turn;
        if (opt.seg == s0 && opt.fwd) {
          loops.push_back(Loop{steps, nx.used, nx.s1, nx.s2});
          continue;
        }
        const std::uint64_t sbit = std::uint64_t{1} << (opt.seg - 1);
        if (opt.seg < s0 || (st.used & sbit)) continue;
        nx.used |= sbit;
        steps.push_back({opt.seg, opt.fwd, false});
        self(self, opt.seg, opt.fwd, nx);
        steps.pop_back();
      }
    };
    steps.assign(1, {s0, true, false});
    walk(walk, s0, true, State{std::uint64_t{1} << (s0 - 1), 0, 0, 0});
  }
  return loops;
}

bool jordan_test(const PairCode& code) {
  if (!parity_ok(code)) return false;
  const auto loops = enumerate_loops(code);
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      const auto& a = loops[i];
      const auto& b = loops[j];
      if (a.segments & b.segments) continue;
      const std::uint64_t crossings = (a.straight_first & b.straight_second) | (a.straight_second & b.straight_first);
      if (std::popcount(crossings) % 2 == 1) return false;
    }
  }
  return true;
}

std::optional<Diagram> try_realize(const PairCode& code) {
  auto e = make_embedder(code);
  if (!e) return std::nullopt;
  return e->build(e->base_flip);
}

Diagram realize(const PairCode& code) {
  auto d = try_realize(code);
  if (!d) throw NotRealizable("code " + to_string(code) + " is not drawable");
  return std::move(*d);
}

bool is_realizable(const PairCode& code) {
  auto e = make_embedder(code);
  if (!e) return false;
  if (e->g.n == 0) return true;
  std::vector<int> turning(e->g.n);
  for (int c = 0; c < e->g.n; ++c) turning[c] = e->orient.relative[c];
  return static_cast<int>(trace_faces(e->g, turning).size()) == e->g.n + 2;
}

std::vector<Diagram> all_embeddings(const PairCode& code) {
  auto e = make_embedder(code);
  if (!e) return {};
  std::vector<Diagram> out;
  const int extra = std::max(0, e->orient.components - 1);
  // Beyond six free components only single reflections are tried.
  std::vector<std::vector<int>> flips;
  if (extra <= 6) {
    for (int mask = 0; mask < (1 << extra); ++mask) {
      auto f = e->base_flip;
      for (int i = 0; i < extra; ++i)
        if (mask >> i & 1) f[i + 1] = -f[i + 1];
      flips.push_back(std::move(f));
    }
  } else {
    flips.push_back(e->base_flip);
    for (int i = 1; i < e->orient.components; ++i) {
      auto f = e->base_flip;
      f[i] = -f[i];
      flips.push_back(std::move(f));
    }
  }
  for (const auto& f : flips)
    if (auto d = e->build(f)) out.push_back(std::move(*d));
  return out;
}

Incidence arcs_at(const Diagram& diagram, int crossing) {
  if (crossing < 0 || crossing >= diagram.crossing_count())
    throw UnknownCrossing("no crossing " + std::to_string(crossing) + " in a " +
                          std::to_string(diagram.crossing_count()) + "-crossing diagram");
  return diagram.incidence[crossing];
}

}  // namespace knottab
