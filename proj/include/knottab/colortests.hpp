#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knottab/alexander.hpp"
#include "knottab/realize.hpp"

namespace knottab {

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GcdViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// n x n table with entries in 1..n; at(i, j) is the color produced when an
// arc of color i passes under an arc of color j (1-based indices).
class ColorMatrix {
 public:
  ColorMatrix() = default;
  ColorMatrix(int n, std::vector<int> row_major);

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;
  friend auto operator<=>(const ColorMatrix&, const ColorMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

// The three axioms: idempotent diagonal, columns are bijections, and
// M[M[l][j]][M[i][j]] = M[M[l][i]][j] for all i, j, l.
bool validate(const ColorMatrix& m);

// No proper nonempty color subset S with M[i][j] in S whenever i is in S.
bool irreducible(const ColorMatrix& m);

// M'[k][j] = i exactly when M[i][j] = k.
ColorMatrix mirror(const ColorMatrix& m);

// Renames color c to perm[c-1]; perm is a permutation of 1..n.
ColorMatrix permuted(const ColorMatrix& m, const std::vector<int>& perm);

// Related by a color permutation, possibly after mirroring one of them.
bool same_test(const ColorMatrix& a, const ColorMatrix& b);

// Smallest row-major matrix among all recolorings of m and of its mirror.
ColorMatrix canonical_test(const ColorMatrix& m);

// All valid irreducible tests with n colors, one canonical matrix per class
// of same_test, in increasing order.
std::vector<ColorMatrix> enumerate_tests(int n);

// M[i][j] = ((k+1) j - k i) mod n, written in 1..n.
ColorMatrix affine(int n, int k);

// Conjugation table of the conjugacy class of the symmetric group on m
// symbols with the given cycle type; elements ordered by one-line notation.
ColorMatrix conjugation(int m, const std::vector<int>& partition);

// Arc colorings with n_out = M[n_in][n_over] at positive crossings and
// n_in = M[n_out][n_over] at negative ones.
std::uint64_t count_colorings(const Diagram& diagram, const ColorMatrix& m);

// Per test the unordered pair of counts for the test and for its mirror
// (stored smaller first), plus an optional polynomial entry.
struct InvariantVector {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  std::optional<LaurentPolynomial> polynomial;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  friend auto operator<=>(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariant_vector(const Diagram& diagram, const std::vector<ColorMatrix>& suite);

// `n=3;1,3,2|3,2,1|2,1,3`.
std::string to_string(const ColorMatrix& m);
ColorMatrix parse_matrix(std::string_view text);

// Space-separated `a/b` count pairs, then `p=<polynomial>` when present.
std::string to_string(const InvariantVector& v);
InvariantVector parse_invariant_vector(std::string_view text);

}  // namespace knottab
