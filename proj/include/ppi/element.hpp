#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "ppi/gauss_rational.hpp"
#include "ppi/word.hpp"

namespace ppi {

/// A finite linear combination of reduced words plus a multiple of the
/// formal unit e. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<NormalWord, GaussRational>;

  Element() = default;
  Element(const NormalWord& w);  // NOLINT(google-explicit-constructor)

  static Element unit(GaussRational c = 1);
  /// Reduces w and wraps it with coefficient 1.
  static Element word(const ExpWord& w);

  const GaussRational& unit_coefficient() const { return unit_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return unit_.is_zero() && terms_.empty(); }

  /// Longest word; the unit counts as its four-letter expansion.
  std::size_t max_letters() const;

  void add_term(const NormalWord& w, const GaussRational& c);
  void add_unit(const GaussRational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const GaussRational& c, const Element& x);
  Element operator-() const;

  friend bool operator==(const Element&, const Element&) = default;

  std::string to_string() const;

 private:
  GaussRational unit_;
  Terms terms_;
};

Element add(const Element& x, const Element& y);
Element scale(const GaussRational& c, const Element& x);
/// Bilinear extension of word_mul; the unit multiplies as the identity.
Element mul(const Element& x, const Element& y);
/// Conjugate-linear extension of word_adjoint.
Element adjoint(const Element& x);

/// v^a v*^b as an element; a = b = 0 gives e.
Element power(unsigned a, unsigned b);
/// x^k for k >= 1.
Element pow(const Element& x, unsigned k);

/// v*v + vv* - v*v v v*, written as words.
Element unit_expansion();
/// Replaces the formal unit by its word expansion.
Element expand_unit(const Element& x);

Element e_elem();
/// vv* - vv*v*v
Element p_elem();
/// v*v - v*vvv*
Element ptilde_elem();

/// p v^n p~ v*^n p, n >= 1.
Element pi(unsigned n);
/// p~ v*^n p v^n p~, n >= 1.
Element pitilde(unsigned n);
/// v*^i pi(n) v^j for 0 <= i, j <= n.
Element matrix_unit(unsigned n, unsigned i, unsigned j);
/// Sum of the diagonal matrix units of block n.
Element z(unsigned n);
/// v*^i p v^j
Element f(unsigned i, unsigned j);
/// v^i p~ v*^j
Element ftilde(unsigned i, unsigned j);

}  // namespace ppi
