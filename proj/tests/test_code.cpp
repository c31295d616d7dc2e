#include <doctest.h>

#include <random>
#include <set>

#include "knottab/code.hpp"
#include "support.hpp"

using namespace knottab;

namespace {
const PairCode kTrefoil({{1, 4}, {5, 2}, {3, 6}});

std::uint64_t factorial_times_power(int n) {
  std::uint64_t v = 1;
  for (int i = 1; i <= n; ++i) v *= 2 * i;
  return v;
}
}  // namespace

TEST_SUITE("code") {
  TEST_CASE("codes validate their labels") {
    CHECK_THROWS_AS(PairCode({{1, 1}}), CodeError);
    CHECK_THROWS_AS(PairCode({{1, 3}}), CodeError);
    CHECK_THROWS_AS(PairCode({{0, 2}}), CodeError);
    CHECK(PairCode().crossing_count() == 0);
    CHECK(PairCode({{3, 2}, {1, 4}}) == PairCode({{1, 4}, {3, 2}}));
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_codes(0, false).size() == 1);
    const auto one = enumerate_codes(1, false);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == PairCode({{1, 2}}));
    CHECK(one[1] == PairCode({{2, 1}}));
    CHECK(enumerate_codes(2, false).size() == 8);
    for (int n = 0; n <= 5; ++n) {
      const auto all = enumerate_codes(n, false);
      CHECK(all.size() == factorial_times_power(n));
      CHECK(std::set<PairCode>(all.begin(), all.end()).size() == all.size());
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].flat() < all[i].flat());
      for (const auto& c : all) CHECK(parity_ok(c));
    }
  }

  TEST_CASE("canonical enumeration gives one code per orbit") {
    for (int n = 0; n <= 5; ++n) {
      std::set<PairCode> orbits;
      for (const auto& c : enumerate_codes(n, false)) orbits.insert(oracle::brute_canonical(c));
      const auto canon = enumerate_codes(n, true);
      CHECK(std::set<PairCode>(canon.begin(), canon.end()) == orbits);
      CHECK(canon.size() == orbits.size());
    }
  }

  TEST_CASE("relabel examples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto c = oracle::random_code(1 + i % 6, rng);
      CHECK(relabel(c, 0, 1) == c);
      const int k = static_cast<int>(rng() % 20);
      CHECK(relabel(relabel(c, k, -1), k, -1) == c);
    }
    CHECK(relabel(kTrefoil, 2, 1) == PairCode({{3, 6}, {1, 4}, {5, 2}}));
    CHECK(relabel(kTrefoil, 2, 1) == kTrefoil);
  }

  TEST_CASE("relabel is a group action") {
    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto c = oracle::random_code(n, rng);
      const int m = 2 * n;
      const int k1 = static_cast<int>(rng() % m), k2 = static_cast<int>(rng() % m);
      const int e1 = rng() & 1 ? 1 : -1, e2 = rng() & 1 ? 1 : -1;
      // a -> k1 + e1 a -> k2 + e2 (k1 + e1 a)
      CHECK(relabel(relabel(c, k1, e1), k2, e2) == relabel(c, k2 + e2 * k1, e1 * e2));
    }
  }

  TEST_CASE("canonical form") {
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
      const int n = static_cast<int>(rng() % 7);
      const auto c = oracle::random_code(n, rng);
      const auto canon = canonical_form(c);
      CHECK(canon == oracle::brute_canonical(c));
      CHECK(canonical_form(canon) == canon);
      CHECK(is_canonical(canon));
      if (n > 0) {
        const int k = static_cast<int>(rng() % (2 * n));
        CHECK(canonical_form(relabel(c, k, -1)) == canon);
        CHECK(canonical_form(relabel(c, k, 1)) == canon);
      }
    }
    CHECK(canonical_form(kTrefoil) == PairCode({{1, 4}, {3, 6}, {5, 2}}));
  }

  TEST_CASE("mirror") {
    CHECK(mirror(PairCode({{1, 2}})) == PairCode({{2, 1}}));
    std::mt19937 rng(14);
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto c = oracle::random_code(n, rng);
      CHECK(mirror(mirror(c)) == c);
      const int k = static_cast<int>(rng() % (2 * n));
      const int e = rng() & 1 ? 1 : -1;
      CHECK(mirror(relabel(c, k, e)) == relabel(mirror(c), k, e));
    }
    // Pair codes carry no planar orientation: the trefoil code is its own
    // mirror after the shift a -> a + 1.
    CHECK(relabel(mirror(kTrefoil), 1, 1) == kTrefoil);
    CHECK(canonical_form(mirror(kTrefoil)) == canonical_form(kTrefoil));
  }

  TEST_CASE("composite diagrams") {
    CHECK_FALSE(is_composite_diagram(PairCode()));
    CHECK_FALSE(is_composite_diagram(PairCode({{1, 2}})));
    CHECK_FALSE(is_composite_diagram(kTrefoil));
    CHECK(is_composite_diagram(PairCode({{1, 2}, {3, 4}})));
    CHECK(is_composite_diagram(PairCode({{1, 4}, {3, 6}, {5, 2}, {7, 8}})));
    // Two trefoils in a row.
    CHECK(is_composite_diagram(PairCode({{1, 4}, {3, 6}, {5, 2}, {7, 10}, {9, 12}, {11, 8}})));
  }

  TEST_CASE("serialization") {
    CHECK(to_string(PairCode()) == "0;");
    CHECK(to_string(kTrefoil) == "3;(1,4)(3,6)(5,2)");
    CHECK(parse_code("3;(1,4)(3,6)(5,2)") == kTrefoil);
    CHECK(parse_code("0;") == PairCode());
    CHECK_THROWS_AS(parse_code("3;(1,4)(3,6)"), CodeError);
    CHECK_THROWS_AS(parse_code("2;(1,4) (3,2)"), CodeError);
    CHECK_THROWS_AS(parse_code("x"), CodeError);
    std::mt19937 rng(15);
    for (int i = 0; i < 100; ++i) {
      const auto c = oracle::random_code(static_cast<int>(rng() % 9), rng);
      CHECK(parse_code(to_string(c)) == c);
      CHECK(unpack(pack(c)) == c);
    }
  }
}
