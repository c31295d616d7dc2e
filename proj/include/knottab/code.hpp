#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knottab {

using Label = int;

// Labels are 1-based and live in {1..2n}; the packed key format bounds n.
inline constexpr int kMaxCrossings = 16;

struct Pair {
  Label over = 0;
  Label under = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A knot projection written as the set of (over, under) label pairs met while
// travelling once around the curve. Pairs are kept sorted by over-label so
// that equality of the stored vectors is equality of the sets.
class PairCode {
 public:
  PairCode() = default;
  explicit PairCode(std::vector<Pair> pairs);

  int crossing_count() const { return static_cast<int>(pairs_.size()); }
  int label_count() const { return 2 * crossing_count(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  // o1,u1,o2,u2,... with pairs in over-label order.
  std::vector<Label> flat() const;

  // partner[l] for l in 1..2n (index 0 unused).
  std::vector<Label> partners() const;
  // is_over[l] for l in 1..2n (index 0 unused).
  std::vector<bool> over_flags() const;

  friend bool operator==(const PairCode&, const PairCode&) = default;
  // Shorter codes first, then lexicographic on flat().
  friend std::strong_ordering operator<=>(const PairCode& a, const PairCode& b);

 private:
  std::vector<Pair> pairs_;
};

// 128-bit hashable image of a code; see pack().
struct CodeKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const CodeKey&, const CodeKey&) = default;
  friend auto operator<=>(const CodeKey&, const CodeKey&) = default;
};

struct CodeKeyHash {
  std::size_t operator()(const CodeKey& k) const noexcept {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ull ^ (k.hi + 0x632BE59BD9B4E019ull + (k.lo >> 29));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 27));
  }
};

CodeKey pack(const PairCode& code);
PairCode unpack(const CodeKey& key);

// Every odd label paired with an even one.
bool parity_ok(const PairCode& code);

// Calls `sink` for every parity-valid code with n crossings, in lexicographic
// order of flat(). With canonical_only, only orbit minima are produced.
void enumerate_codes(int n, bool canonical_only, const std::function<void(const PairCode&)>& sink);
std::vector<PairCode> enumerate_codes(int n, bool canonical_only);

// Label a becomes ((k + eps*a - 1) mod 2n) + 1.
PairCode relabel(const PairCode& code, int k, int eps);

// Minimum of flat() over all 4n relabelings.
PairCode canonical_form(const PairCode& code);
bool is_canonical(const PairCode& code);

// Swap over and under at every crossing.
PairCode mirror(const PairCode& code);

// True when some circle meeting the curve twice separates the crossings into
// two nonempty groups: the labels of one group then form a cyclic interval.
// Kinks, nugatory crossings and connected sums all show up this way.
bool is_composite_diagram(const PairCode& code);

// `<n>;(o1,u1)(o2,u2)...` with pairs in over-label order; `0;` when empty.
std::string to_string(const PairCode& code);
PairCode parse_code(std::string_view text);

}  // namespace knottab

template <>
struct std::hash<knottab::CodeKey> {
  std::size_t operator()(const knottab::CodeKey& k) const noexcept { return knottab::CodeKeyHash{}(k); }
};
