#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppi {

enum class Letter : unsigned char { plain, star };

constexpr Letter flip(Letter l) { return l == Letter::plain ? Letter::star : Letter::plain; }

/// A maximal block of equal letters: v^exponent or (v*)^exponent.
struct Run {
  Letter sign;
  unsigned exponent;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Raised by the word and element parsers; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A non-empty word in v and v*, stored as alternating exponent runs.
class ExpWord {
 public:
  /// Runs must be non-empty, exponents >= 1, and adjacent signs different.
  explicit ExpWord(std::vector<Run> runs);

  /// Builds from arbitrary runs: drops zero exponents and merges equal neighbours.
  static ExpWord from_factors(std::span<const Run> factors);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t letters() const;

  /// Reversed word with every letter flipped.
  ExpWord adjoint() const;
  ExpWord concat(const ExpWord& other) const;

  std::string to_string() const;

  friend bool operator==(const ExpWord&, const ExpWord&) = default;

 private:
  std::vector<Run> runs_;
};

/// Parses whitespace-separated factors `v`, `v*`, optionally raised to `^k`.
ExpWord parse_word(std::string_view text);

enum class Shape : unsigned char {
  PP,   ///< v^a v*^b, a + b >= 1; pure powers live here
  SP,   ///< v*^b v^a, a, b >= 1
  PSP,  ///< v^a v*^b v^c, 0 < min(a,c) <= max(a,c) < b
  SPS,  ///< v*^a v^b v*^c, same constraint
};

/// One of the four reduced word shapes. Exponent names follow the shape
/// comments above; `c` is zero for the two-run shapes. A pure star power
/// v*^b is always spelled PP(0, b), never SP(b, 0).
class NormalWord {
 public:
  static NormalWord pp(unsigned a, unsigned b);
  static NormalWord sp(unsigned b, unsigned a);
  static NormalWord psp(unsigned a, unsigned b, unsigned c);
  static NormalWord sps(unsigned a, unsigned b, unsigned c);

  Shape shape() const { return shape_; }
  unsigned a() const { return a_; }
  unsigned b() const { return b_; }
  unsigned c() const { return c_; }

  std::size_t letters() const { return std::size_t{a_} + b_ + c_; }

  /// Back to run-length form (the embedding into raw words).
  ExpWord to_exp_word() const;

  /// "v v*^3", "v*^2 v^3 v*"
  std::string to_string() const;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend std::strong_ordering operator<=>(const NormalWord& x, const NormalWord& y);

 private:
  NormalWord(Shape s, unsigned a, unsigned b, unsigned c) : shape_(s), a_(a), b_(b), c_(c) {}

  Shape shape_;
  unsigned a_, b_, c_;
};

/// Rewrites w with the three-power identities (leftmost triple first) until
/// at most three runs remain and no triple is shortenable.
NormalWord reduce(const ExpWord& w);

NormalWord word_mul(const NormalWord& x, const NormalWord& y);

NormalWord word_adjoint(const NormalWord& x);

/// True if the three-power identities shorten the triple X^a Y^b X^c.
constexpr bool triple_reducible(unsigned a, unsigned b, unsigned c) { return (a > c ? a : c) >= b; }

}  // namespace ppi
