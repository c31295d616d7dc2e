#include "knottab/alexander.hpp"

#include <algorithm>
#include <charconv>

namespace knottab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("polynomial coefficient overflow");
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int low_exponent, std::vector<std::int64_t> coefficients)
    : low_(low_exponent), coefficients_(std::move(coefficients)) {
  trim();
}

void LaurentPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  std::size_t lead = 0;
  while (lead < coefficients_.size() && coefficients_[lead] == 0) ++lead;
  coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ = coefficients_.empty() ? 0 : low_ + static_cast<int>(lead);
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coefficients_[exponent - low_];
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  LaurentPolynomial p = coefficients_.front() < 0 ? -*this : *this;
  p.low_ = 0;
  return p;
}

bool LaurentPolynomial::is_normalized() const {
  return is_zero() || (low_ == 0 && coefficients_.front() > 0);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coefficients_) c = checked_mul(c, -1);
  return p;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low_, b.low_);
  const int high = std::max(a.high_exponent(), b.high_exponent());
  std::vector<std::int64_t> c(high - low + 1, 0);
  for (int e = low; e <= high; ++e) c[e - low] = checked_add(a.coefficient(e), b.coefficient(e));
  return LaurentPolynomial(low, std::move(c));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
  return LaurentPolynomial(a.low_ + b.low_, std::move(c));
}

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top degree down.
  std::vector<std::int64_t> rem = a.coefficients_;
  const auto& d = b.coefficients_;
  if (rem.size() < d.size()) throw std::domain_error("inexact polynomial division");
  std::vector<std::int64_t> q(rem.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(q[k], d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; }))
    throw std::domain_error("inexact polynomial division");
  return LaurentPolynomial(a.low_ - b.low_, std::move(q));
}

LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return LaurentPolynomial::constant(1);
  LaurentPolynomial previous = LaurentPolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<LaurentPolynomial>> crossing_matrix(const Diagram& diagram) {
  const int n = diagram.crossing_count();
  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto one = LaurentPolynomial::constant(1);
  std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
  for (int c = 0; c < n; ++c) {
    const Incidence& at = diagram.incidence[c];
    auto& row = m[c];
    if (diagram.signs[c] > 0) {
      row[at.in_arc] = row[at.in_arc] + t;
      row[at.out_arc] = row[at.out_arc] - one;
      row[at.over_arc] = row[at.over_arc] + (one - t);
    } else {
      row[at.in_arc] = row[at.in_arc] + one;
      row[at.out_arc] = row[at.out_arc] - t;
      row[at.over_arc] = row[at.over_arc] + (t - one);
    }
  }
  return m;
}

LaurentPolynomial alexander_poly(const Diagram& diagram) {
  const int n = diagram.crossing_count();
  if (n == 0) return LaurentPolynomial::constant(1);
  auto m = crossing_matrix(diagram);
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return determinant(std::move(m)).normalized();
}

std::int64_t eval_at_minus_one(const LaurentPolynomial& p) {
  std::int64_t sum = 0;
  for (int e = p.low_exponent(); !p.is_zero() && e <= p.high_exponent(); ++e) {
    const std::int64_t c = p.coefficient(e);
    sum = checked_add(sum, (e % 2 == 0) ? c : -c);
  }
  return sum < 0 ? -sum : sum;
}

std::string to_string(const LaurentPolynomial& p) {
  const auto q = p.normalized();
  if (q.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < q.coefficients().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q.coefficients()[i]);
  }
  return out;
}

LaurentPolynomial parse_polynomial(std::string_view text) {
  std::vector<std::int64_t> c;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw std::invalid_argument("bad polynomial text '" + std::string(text) + "'");
    c.push_back(v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  const std::size_t written = c.size();
  LaurentPolynomial p(0, std::move(c));
  const bool ok = p.is_zero() ? text == "0" : p.coefficients().size() == written && p.is_normalized();
  if (!ok)
    throw std::invalid_argument("polynomial text '" + std::string(text) + "' is not in normal form");
  return p;
}

}  // namespace knottab
