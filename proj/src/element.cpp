#include "ppi/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppi {

Element::Element(const NormalWord& w) { terms_.emplace(w, GaussRational(1)); }

Element Element::unit(GaussRational c) {
  Element x;
  x.add_unit(c);
  return x;
}

Element Element::word(const ExpWord& w) { return Element(reduce(w)); }

std::size_t Element::max_letters() const {
  std::size_t n = unit_.is_zero() ? 0 : 4;
  for (const auto& [w, c] : terms_) n = std::max(n, w.letters());
  return n;
}

void Element::add_term(const NormalWord& w, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_unit(const GaussRational& c) { unit_ += c; }

Element& Element::operator+=(const Element& o) {
  unit_ += o.unit_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  unit_ -= o.unit_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator-() const { return scale(-1, *this); }

Element operator*(const GaussRational& c, const Element& x) {
  Element r;
  if (c.is_zero()) return r;
  r.unit_ = c * x.unit_;
  for (const auto& [w, k] : x.terms_) r.terms_.emplace(w, c * k);
  return r;
}

Element operator*(const Element& x, const Element& y) {
  Element r;
  r.unit_ = x.unit_ * y.unit_;
  if (!x.unit_.is_zero()) {
    for (const auto& [w, c] : y.terms_) r.add_term(w, x.unit_ * c);
  }
  if (!y.unit_.is_zero()) {
    for (const auto& [w, c] : x.terms_) r.add_term(w, c * y.unit_);
  }
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) r.add_term(word_mul(wx, wy), cx * cy);
  }
  return r;
}

std::string Element::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto emit = [&](const GaussRational& c, const std::string& atom) {
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      const GaussRational mag = negative ? -c : c;
      if (!mag.is_one()) coeff = mag.to_string() + " ";
    } else {
      coeff = "(" + c.to_string() + ") ";
    }
    if (s.empty()) {
      s = (negative ? "-" : "") + coeff + atom;
    } else {
      s += (negative ? " - " : " + ") + coeff + atom;
    }
  };
  if (!unit_.is_zero()) emit(unit_, "e");
  for (const auto& [w, c] : terms_) emit(c, w.to_string());
  return s;
}

Element add(const Element& x, const Element& y) { return x + y; }

Element scale(const GaussRational& c, const Element& x) { return c * x; }

Element mul(const Element& x, const Element& y) { return x * y; }

Element adjoint(const Element& x) {
  Element r = Element::unit(x.unit_coefficient().conj());
  for (const auto& [w, c] : x.terms()) r.add_term(word_adjoint(w), c.conj());
  return r;
}

Element power(unsigned a, unsigned b) {
  if (a + b == 0) return e_elem();
  return Element(NormalWord::pp(a, b));
}

Element pow(const Element& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("power must be at least 1");
  Element r = x;
  for (unsigned i = 1; i < k; ++i) r = r * x;
  return r;
}

Element unit_expansion() {
  return Element::word(parse_word("v* v")) + Element::word(parse_word("v v*")) -
         Element::word(parse_word("v* v v v*"));
}

Element expand_unit(const Element& x) {
  Element r = x;
  const GaussRational c = x.unit_coefficient();
  if (c.is_zero()) return r;
  r -= Element::unit(c);
  r += c * unit_expansion();
  return r;
}

Element e_elem() { return Element::unit(); }

Element p_elem() { return power(1, 1) - Element::word(parse_word("v v* v* v")); }

Element ptilde_elem() { return power(0, 1) * power(1, 0) - Element::word(parse_word("v* v v v*")); }

namespace {

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": index must be at least 1");
}

}  // namespace

Element pi(unsigned n) {
  require_positive(n, "pi");
  const Element p = p_elem();
  return p * power(n, 0) * ptilde_elem() * power(0, n) * p;
}

Element pitilde(unsigned n) {
  require_positive(n, "pitilde");
  const Element pt = ptilde_elem();
  return pt * power(0, n) * p_elem() * power(n, 0) * pt;
}

Element matrix_unit(unsigned n, unsigned i, unsigned j) {
  require_positive(n, "matrix_unit");
  if (i > n || j > n) throw std::out_of_range("matrix_unit: indices must not exceed n");
  return power(0, i) * pi(n) * power(j, 0);
}

Element z(unsigned n) {
  require_positive(n, "z");
  const Element block = pi(n);
  Element r;
  for (unsigned i = 0; i <= n; ++i) r += power(0, i) * block * power(i, 0);
  return r;
}

Element f(unsigned i, unsigned j) { return power(0, i) * p_elem() * power(j, 0); }

Element ftilde(unsigned i, unsigned j) { return power(i, 0) * ptilde_elem() * power(0, j); }

}  // namespace ppi
