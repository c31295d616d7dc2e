#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knottab/realize.hpp"

namespace knottab {

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Finitely supported integer Laurent polynomial in t. Stored as a lowest
// exponent plus a dense coefficient run with nonzero ends; zero is empty.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int low_exponent, std::vector<std::int64_t> coefficients);
  static LaurentPolynomial constant(std::int64_t c) { return LaurentPolynomial(0, {c}); }
  static LaurentPolynomial monomial(std::int64_t c, int exponent) { return LaurentPolynomial(exponent, {c}); }

  bool is_zero() const { return coefficients_.empty(); }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  std::int64_t coefficient(int exponent) const;

  // Multiplied by the unit +-t^k that puts the lowest term at exponent 0 with
  // a positive coefficient.
  LaurentPolynomial normalized() const;
  bool is_normalized() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  // Exact division; throws std::domain_error when b does not divide a.
  friend LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
  friend auto operator<=>(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coefficients_;
};

// Determinant of a square matrix of polynomials by fraction-free elimination.
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> matrix);

// One row per crossing over the arc variables: t*x_in - x_out + (1-t)*x_over
// at a positive crossing, x_in - t*x_out + (t-1)*x_over at a negative one.
std::vector<std::vector<LaurentPolynomial>> crossing_matrix(const Diagram& diagram);

// Normalized determinant of the crossing matrix without its last row and
// column; 1 for the crossingless diagram.
LaurentPolynomial alexander_poly(const Diagram& diagram);

// |p(-1)|.
std::int64_t eval_at_minus_one(const LaurentPolynomial& p);

// Coefficients from exponent 0 upward after normalization, e.g. `1,-1,1`;
// the zero polynomial is `0`.
std::string to_string(const LaurentPolynomial& p);
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace knottab
