#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "knottab/alexander.hpp"
#include "knottab/code.hpp"
#include "knottab/colortests.hpp"
#include "knottab/realize.hpp"

namespace oracle {

// Dowker-Thistlethwaite form: for the odd labels 1,3,...,2n-1 in order, the
// even partner, negated when the even label is the over-pass.
std::vector<int> dowker_code(const knottab::PairCode& code);

// Drawable iff some choice of cyclic order at each crossing (two per
// crossing) yields a sphere embedding: n + 2 faces by Euler's formula.
bool dowker_realizable(const std::vector<int>& dt);

// Minimum of flat() over all relabelings, computed with relabel().
knottab::PairCode brute_canonical(const knottab::PairCode& code);

// Leibniz expansion of the determinant.
knottab::LaurentPolynomial leibniz_det(const std::vector<std::vector<knottab::LaurentPolynomial>>& m);

// Tries every assignment of colors to arcs.
std::uint64_t brute_colorings(const knottab::Diagram& d, const knottab::ColorMatrix& m);

// Uniform parity-valid code with n crossings.
knottab::PairCode random_code(int n, std::mt19937& rng);
// Random realizable code with n crossings (by rejection).
knottab::PairCode random_realizable(int n, std::mt19937& rng);

}  // namespace oracle
