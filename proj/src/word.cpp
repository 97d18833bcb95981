#include "ppi/word.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace ppi {

namespace {

void append_run(std::vector<Run>& out, Run r) {
  if (r.exponent == 0) return;
  if (!out.empty() && out.back().sign == r.sign) {
    out.back().exponent += r.exponent;
  } else {
    out.push_back(r);
  }
}

std::string power_string(Letter sign, unsigned exponent) {
  std::string s = sign == Letter::plain ? "v" : "v*";
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

}  // namespace

ExpWord::ExpWord(std::vector<Run> runs) : runs_(std::move(runs)) {
  if (runs_.empty()) throw std::invalid_argument("empty word");
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].exponent == 0) throw std::invalid_argument("zero exponent in word");
    if (i > 0 && runs_[i].sign == runs_[i - 1].sign) {
      throw std::invalid_argument("adjacent runs with equal sign");
    }
  }
}

ExpWord ExpWord::from_factors(std::span<const Run> factors) {
  std::vector<Run> runs;
  for (const Run& r : factors) append_run(runs, r);
  return ExpWord(std::move(runs));
}

std::size_t ExpWord::letters() const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += r.exponent;
  return n;
}

ExpWord ExpWord::adjoint() const {
  std::vector<Run> runs(runs_.rbegin(), runs_.rend());
  for (Run& r : runs) r.sign = flip(r.sign);
  return ExpWord(std::move(runs));
}

ExpWord ExpWord::concat(const ExpWord& other) const {
  std::vector<Run> runs = runs_;
  for (const Run& r : other.runs_) append_run(runs, r);
  return ExpWord(std::move(runs));
}

std::string ExpWord::to_string() const {
  std::string s;
  for (const Run& r : runs_) {
    if (!s.empty()) s += ' ';
    s += power_string(r.sign, r.exponent);
  }
  return s;
}

ExpWord parse_word(std::string_view text) {
  constexpr unsigned max_exponent = 1u << 20;
  std::vector<Run> factors;
  std::size_t pos = 0;
  auto at_space = [&] { return pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])); };
  while (true) {
    while (at_space()) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != 'v') throw ParseError("expected 'v'", pos);
    ++pos;
    Run r{Letter::plain, 1};
    if (pos < text.size() && text[pos] == '*') {
      r.sign = Letter::star;
      ++pos;
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      unsigned long k = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        k = k * 10 + static_cast<unsigned>(text[pos] - '0');
        if (k > max_exponent) throw ParseError("exponent too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected exponent after '^'", start);
      if (k == 0) throw ParseError("exponent must be at least 1", start);
      r.exponent = static_cast<unsigned>(k);
    }
    if (pos < text.size() && !at_space()) throw ParseError("expected whitespace between factors", pos);
    factors.push_back(r);
  }
  if (factors.empty()) throw ParseError("empty word", 0);
  return ExpWord::from_factors(factors);
}

NormalWord NormalWord::pp(unsigned a, unsigned b) {
  if (a + b == 0) throw std::invalid_argument("PP word needs a + b >= 1");
  return {Shape::PP, a, b, 0};
}

NormalWord NormalWord::sp(unsigned b, unsigned a) {
  if (a == 0 || b == 0) throw std::invalid_argument("SP word needs a, b >= 1 (pure powers are PP)");
  return {Shape::SP, a, b, 0};
}

NormalWord NormalWord::psp(unsigned a, unsigned b, unsigned c) {
  if (std::min(a, c) == 0 || std::max(a, c) >= b) {
    throw std::invalid_argument("PSP word needs 0 < min(a,c) <= max(a,c) < b");
  }
  return {Shape::PSP, a, b, c};
}

NormalWord NormalWord::sps(unsigned a, unsigned b, unsigned c) {
  if (std::min(a, c) == 0 || std::max(a, c) >= b) {
    throw std::invalid_argument("SPS word needs 0 < min(a,c) <= max(a,c) < b");
  }
  return {Shape::SPS, a, b, c};
}

ExpWord NormalWord::to_exp_word() const {
  std::vector<Run> f;
  switch (shape_) {
    case Shape::PP: f = {{Letter::plain, a_}, {Letter::star, b_}}; break;
    case Shape::SP: f = {{Letter::star, b_}, {Letter::plain, a_}}; break;
    case Shape::PSP: f = {{Letter::plain, a_}, {Letter::star, b_}, {Letter::plain, c_}}; break;
    case Shape::SPS: f = {{Letter::star, a_}, {Letter::plain, b_}, {Letter::star, c_}}; break;
  }
  return ExpWord::from_factors(f);
}

std::string NormalWord::to_string() const { return to_exp_word().to_string(); }

std::strong_ordering operator<=>(const NormalWord& x, const NormalWord& y) {
  return std::tuple(x.letters(), x.shape_, x.a_, x.b_, x.c_) <=>
         std::tuple(y.letters(), y.shape_, y.a_, y.b_, y.c_);
}

namespace {

// X^a Y^b X^c with X = first, max(a,c) >= b. Cases are tried in the order of
// the identity table for the leading letter; overlapping cases agree.
std::vector<Run> rewrite_triple(Letter first, unsigned a, unsigned b, unsigned c) {
  const Letter other = flip(first);
  if (std::min(a, c) >= b) return {{first, a - b + c}};
  const bool ascending = a <= b && b <= c;
  const bool descending = a >= b && b >= c;
  if (first == Letter::star) {
    if (ascending) return {{other, b - a}, {first, c}};
    if (descending) return {{first, a}, {other, b - c}};
  } else {
    if (descending) return {{first, a}, {other, b - c}};
    if (ascending) return {{other, b - a}, {first, c}};
  }
  throw std::logic_error("rewrite_triple called on an irreducible triple");
}

NormalWord from_short_runs(const std::vector<Run>& w) {
  switch (w.size()) {
    case 1:
      return w[0].sign == Letter::plain ? NormalWord::pp(w[0].exponent, 0) : NormalWord::pp(0, w[0].exponent);
    case 2:
      return w[0].sign == Letter::plain ? NormalWord::pp(w[0].exponent, w[1].exponent)
                                        : NormalWord::sp(w[0].exponent, w[1].exponent);
    case 3:
      return w[0].sign == Letter::plain ? NormalWord::psp(w[0].exponent, w[1].exponent, w[2].exponent)
                                        : NormalWord::sps(w[0].exponent, w[1].exponent, w[2].exponent);
    default:
      throw std::logic_error("irreducible word with more than three runs");
  }
}

}  // namespace

NormalWord reduce(const ExpWord& word) {
  std::vector<Run> w = word.runs();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      const unsigned a = w[i].exponent, b = w[i + 1].exponent, c = w[i + 2].exponent;
      if (!triple_reducible(a, b, c)) continue;
      std::vector<Run> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      for (const Run& r : rewrite_triple(w[i].sign, a, b, c)) append_run(next, r);
      for (std::size_t j = i + 3; j < w.size(); ++j) append_run(next, w[j]);
      w = std::move(next);
      changed = true;
      break;
    }
  }
  return from_short_runs(w);
}

NormalWord word_mul(const NormalWord& x, const NormalWord& y) {
  return reduce(x.to_exp_word().concat(y.to_exp_word()));
}

NormalWord word_adjoint(const NormalWord& x) {
  switch (x.shape()) {
    case Shape::PP: return NormalWord::pp(x.b(), x.a());
    case Shape::SP: return NormalWord::sp(x.a(), x.b());
    case Shape::PSP: return NormalWord::sps(x.c(), x.b(), x.a());
    case Shape::SPS: return NormalWord::psp(x.c(), x.b(), x.a());
  }
  throw std::logic_error("unknown shape");
}

}  // namespace ppi
