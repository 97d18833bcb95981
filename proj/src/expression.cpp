#include "ppi/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ppi {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Element run() {
    skip();
    if (done()) fail("empty expression");
    Element x = expr();
    skip();
    if (!done()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return x;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Element expr() {
    Element x = term();
    for (;;) {
      if (accept('+')) {
        x += term();
      } else if (accept('-')) {
        x -= term();
      } else {
        return x;
      }
    }
  }

  bool starts_factor() {
    skip();
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Element term() {
    const bool negate = accept('-');
    Element x = factor();
    for (;;) {
      if (accept('*')) {
        x = x * factor();
      } else if (starts_factor()) {
        x = x * factor();
      } else {
        break;
      }
    }
    return negate ? -x : x;
  }

  Element factor() {
    Element x = primary();
    while (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const unsigned k = integer();
      if (k == 0) fail_at("exponent must be at least 1", at);
      x = pow(x, k);
    }
    return x;
  }

  unsigned integer() {
    skip();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail_at("integer too large", start);
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  std::vector<unsigned> indices(std::size_t count) {
    expect('[');
    std::vector<unsigned> out;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) expect(',');
      out.push_back(integer());
    }
    expect(']');
    return out;
  }

  Element scalar() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    // "2i", but "2 i" is a product and "2in" an unknown atom.
    if (peek() == 'i' && !std::isalnum(static_cast<unsigned char>(pos_ + 1 < s_.size() ? s_[pos_ + 1] : ' '))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    try {
      return Element::unit(GaussRational::parse(text));
    } catch (const std::exception&) {
      fail_at("bad scalar '" + text + "'", start);
    }
  }

  Element primary() {
    skip();
    const std::size_t start = pos_;
    if (done()) fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Element x = expr();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));

    if (name == "v") {
      // A star glued to the letter is the adjoint letter.
      if (peek() == '*') {
        ++pos_;
        return power(0, 1);
      }
      return power(1, 0);
    }
    if (name == "i") return Element::unit(GaussRational::i());
    if (name == "e") return e_elem();
    if (name == "p") return p_elem();
    if (name == "pt") return ptilde_elem();
    if (name == "adj") {
      expect('(');
      Element x = expr();
      expect(')');
      return adjoint(x);
    }
    if (name == "pi" || name == "pit" || name == "z") {
      const auto ix = indices(1);
      if (ix[0] == 0) fail_at(name + "[0] is not defined", start);
      return name == "pi" ? pi(ix[0]) : name == "pit" ? pitilde(ix[0]) : z(ix[0]);
    }
    if (name == "eu") {
      const auto ix = indices(3);
      if (ix[0] == 0) fail_at("eu needs n >= 1", start);
      if (ix[1] > ix[0] || ix[2] > ix[0]) fail_at("eu index exceeds n", start);
      return matrix_unit(ix[0], ix[1], ix[2]);
    }
    if (name == "f" || name == "ft") {
      const auto ix = indices(2);
      return name == "f" ? f(ix[0], ix[1]) : ftilde(ix[0], ix[1]);
    }
    fail_at("unknown atom '" + name + "'", start);
  }
};

}  // namespace

Element parse_element(std::string_view text) { return Parser(text).run(); }

}  // namespace ppi
