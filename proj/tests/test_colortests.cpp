#include <doctest.h>

#include <random>

#include "knottab/colortests.hpp"
#include "knottab/moves.hpp"
#include "support.hpp"

using namespace knottab;

namespace {
const PairCode kTrefoil({{1, 4}, {3, 6}, {5, 2}});
const PairCode kFigureEight({{1, 4}, {3, 6}, {5, 8}, {7, 2}});

ColorMatrix tricolor() {
  std::vector<int> e;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) e.push_back(i == j ? i : 6 - i - j);
  return ColorMatrix(3, e);
}

ColorMatrix projection(int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e.push_back(i);
  return ColorMatrix(n, e);
}
}  // namespace

TEST_SUITE("colortests") {
  TEST_CASE("matrix construction") {
    CHECK_THROWS(ColorMatrix(2, {1, 2, 3, 1}));
    CHECK_THROWS(ColorMatrix(2, {1, 2, 1}));
    CHECK_THROWS(ColorMatrix(0, {}));
  }

  TEST_CASE("validate") {
    CHECK(validate(ColorMatrix(1, {1})));
    CHECK(validate(tricolor()));
    // Both two-color tables with a fixed diagonal and bijective columns.
    const ColorMatrix a(2, {1, 1, 2, 2});
    const ColorMatrix b(2, {1, 2, 2, 1});
    CHECK(validate(a));
    CHECK_FALSE(irreducible(a));
    CHECK_FALSE(validate(b));
    CHECK_FALSE(validate(ColorMatrix(3, {1, 3, 2, 3, 2, 1, 3, 1, 3})));
  }

  TEST_CASE("irreducible") {
    CHECK(irreducible(tricolor()));
    CHECK(irreducible(ColorMatrix(1, {1})));
    for (int n = 2; n <= 5; ++n) CHECK_FALSE(irreducible(projection(n)));
  }

  TEST_CASE("same test") {
    const auto t = tricolor();
    CHECK(same_test(t, t));
    CHECK(mirror(t) == t);
    CHECK(same_test(t, mirror(t)));
    CHECK_THROWS_AS(same_test(t, affine(5, 1)), SizeMismatch);
    CHECK(same_test(affine(5, 1), mirror(affine(5, 1))));
    CHECK_FALSE(same_test(affine(5, 1), affine(5, 2)));
    // affine(5,2) and affine(5,3) are each other's mirror.
    CHECK(same_test(affine(5, 2), affine(5, 3)));
    std::mt19937 rng(51);
    for (int i = 0; i < 20; ++i) {
      std::vector<int> perm = {1, 2, 3, 4, 5, 6, 7};
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto m = affine(7, 1 + static_cast<int>(rng() % 5));
      CHECK(same_test(m, permuted(m, perm)));
      CHECK(validate(permuted(m, perm)));
    }
  }

  TEST_CASE("enumerated census") {
    const int expected[] = {1, 0, 1, 1, 2, 2, 3};
    for (int n = 1; n <= 7; ++n) {
      const auto tests = enumerate_tests(n);
      CHECK(static_cast<int>(tests.size()) == expected[n - 1]);
      for (const auto& m : tests) {
        CHECK(validate(m));
        CHECK(irreducible(m));
        CHECK(canonical_test(m) == m);
      }
      for (std::size_t a = 0; a < tests.size(); ++a)
        for (std::size_t b = a + 1; b < tests.size(); ++b) CHECK_FALSE(same_test(tests[a], tests[b]));
    }
    CHECK(enumerate_tests(3).front() == canonical_test(tricolor()));
  }

  TEST_CASE("affine family") {
    CHECK(affine(3, 1) == tricolor());
    CHECK_THROWS_AS(affine(4, 1), GcdViolation);
    CHECK_THROWS_AS(affine(6, 2), GcdViolation);
    CHECK(validate(affine(5, 1)));
    CHECK(irreducible(affine(5, 1)));
    for (int n = 2; n <= 11; ++n)
      for (int k = 1; k < n; ++k) {
        try {
          const auto m = affine(n, k);
          CHECK(validate(m));
        } catch (const GcdViolation&) {
        }
      }
  }

  TEST_CASE("conjugation family") {
    CHECK(same_test(conjugation(3, {2, 1}), tricolor()));
    CHECK(conjugation(2, {2}) == ColorMatrix(1, {1}));
    const auto cyc = conjugation(3, {3});
    CHECK(validate(cyc));
    CHECK_FALSE(irreducible(cyc));
    CHECK(cyc == projection(2));
    for (int m = 1; m <= 5; ++m) {
      std::vector<std::vector<int>> parts;
      std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int cap, std::vector<int>& cur) {
        if (left == 0) {
          parts.push_back(cur);
          return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
          cur.push_back(p);
          rec(left - p, p, cur);
          cur.pop_back();
        }
      };
      std::vector<int> cur;
      rec(m, m, cur);
      for (const auto& p : parts) CHECK(validate(conjugation(m, p)));
    }
    CHECK_THROWS(conjugation(3, {1, 2}));
    CHECK_THROWS(conjugation(3, {2}));
  }

  TEST_CASE("coloring counts") {
    CHECK(count_colorings(realize(PairCode()), tricolor()) == 3);
    CHECK(count_colorings(realize(PairCode()), affine(7, 2)) == 7);
    CHECK(count_colorings(realize(kTrefoil), tricolor()) == 9);
    CHECK(count_colorings(realize(kFigureEight), tricolor()) == 3);
    CHECK(count_colorings(realize(kFigureEight), affine(5, 1)) == 25);
    std::mt19937 rng(52);
    const std::vector<ColorMatrix> tests = {tricolor(), affine(5, 1), affine(5, 2), enumerate_tests(4).front(),
                                            enumerate_tests(6).back()};
    for (int i = 0; i < 60; ++i) {
      const auto d = realize(oracle::random_realizable(1 + static_cast<int>(rng() % 5), rng));
      for (const auto& m : tests) {
        const auto count = count_colorings(d, m);
        CHECK(count == oracle::brute_colorings(d, m));
        CHECK(count >= static_cast<std::uint64_t>(m.size()));
      }
    }
  }

  TEST_CASE("invariant vectors") {
    std::vector<ColorMatrix> suite;
    for (int n = 1; n <= 3; ++n)
      for (const auto& m : enumerate_tests(n)) suite.push_back(m);
    const auto u = invariant_vector(realize(PairCode()), suite);
    const auto t = invariant_vector(realize(kTrefoil), suite);
    const auto f = invariant_vector(realize(kFigureEight), suite);
    CHECK(u.counts == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {3, 3}});
    CHECK(t.counts == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {9, 9}});
    CHECK(t != f);
    CHECK(parse_invariant_vector(to_string(t)) == t);
    InvariantVector withp = t;
    withp.polynomial = LaurentPolynomial(0, {1, -1, 1});
    CHECK(to_string(withp) == "1/1 9/9 p=1,-1,1");
    CHECK(parse_invariant_vector(to_string(withp)) == withp);
    CHECK_THROWS(parse_invariant_vector("3/1"));
    CHECK_THROWS(parse_invariant_vector("p=1 3/3"));
  }

  TEST_CASE("mirror compensation") {
    std::mt19937 rng(53);
    const std::vector<ColorMatrix> suite = {affine(5, 2), affine(7, 2), affine(7, 3), tricolor()};
    for (int i = 0; i < 60; ++i) {
      const auto c = oracle::random_realizable(3 + static_cast<int>(rng() % 5), rng);
      CHECK(invariant_vector(realize(c), suite) == invariant_vector(realize(mirror(c)), suite));
      // Counting the mirrored diagram with M equals counting with mirror(M).
      const auto d = realize(c);
      const auto md = realize(mirror(c));
      for (const auto& m : suite) {
        const auto a = count_colorings(d, m);
        const auto b = count_colorings(d, mirror(m));
        const auto x = count_colorings(md, m);
        CHECK(((a == x) || (b == x)));
      }
    }
  }

  TEST_CASE("serialization") {
    CHECK(to_string(tricolor()) == "n=3;1,3,2|3,2,1|2,1,3");
    CHECK(parse_matrix("n=3;1,3,2|3,2,1|2,1,3") == tricolor());
    CHECK(parse_matrix("n=1;1") == ColorMatrix(1, {1}));
    CHECK_THROWS(parse_matrix("n=3;1,3,2|3,2,1"));
    CHECK_THROWS(parse_matrix("n=2;1,2|2,3"));
    CHECK_THROWS(parse_matrix("3;1"));
    CHECK(parse_matrix(to_string(affine(7, 3))) == affine(7, 3));
  }

  TEST_CASE("move invariance of coloring counts") {
    std::mt19937 rng(54);
    std::vector<ColorMatrix> suite;
    for (int n = 1; n <= 5; ++n)
      for (const auto& m : enumerate_tests(n)) suite.push_back(m);
    for (int i = 0; i < 30; ++i) {
      const auto c = oracle::random_realizable(1 + static_cast<int>(rng() % 6), rng);
      const auto v = invariant_vector(realize(c), suite);
      for (const auto& nb : all_neighbors(c, c.crossing_count() + 1, true))
        CHECK(invariant_vector(realize(nb), suite) == v);
    }
  }
}
