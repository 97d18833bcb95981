#pragma once

// Test-only reference evaluation. Words are multiplied out letter by letter
// as explicit integer matrices, without the run-length partial-map kernel the
// library uses.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ppi/element.hpp"
#include "ppi/matrix.hpp"
#include "ppi/word.hpp"

namespace ppi::testing {

inline MatrixZ shift_matrix(std::size_t n) {
  MatrixZ m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  return m;
}

inline MatrixZ transpose(const MatrixZ& m) {
  MatrixZ t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

inline std::vector<Letter> letters_of(const ExpWord& w) {
  std::vector<Letter> out;
  for (const Run& r : w.runs()) out.insert(out.end(), r.exponent, r.sign);
  return out;
}

/// Product of letter matrices, given images of v and v*.
inline MatrixZ multiply_letters(const std::vector<Letter>& word, const MatrixZ& v, const MatrixZ& vstar) {
  MatrixZ acc = MatrixZ::identity(v.rows());
  for (Letter l : word) acc = acc * (l == Letter::plain ? v : vstar);
  return acc;
}

inline MatrixZ jordan_word(std::size_t n, const ExpWord& w) {
  const MatrixZ v = shift_matrix(n);
  return multiply_letters(letters_of(w), v, transpose(v));
}

inline MatrixZ crop(const MatrixZ& m, std::size_t size) {
  MatrixZ r(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) r(i, j) = m(i, j);
  }
  return r;
}

/// Both legs of the shift pair on the first `window` basis vectors. The
/// product is formed in a padded space large enough that no index of a
/// window column ever reaches the padding edge, then compressed.
inline std::vector<MatrixZ> pair_word(std::size_t window, const ExpWord& w) {
  const std::size_t big = window + w.letters() + 1;
  const MatrixZ fwd = shift_matrix(big);
  const MatrixZ bwd = transpose(fwd);
  const auto word = letters_of(w);
  return {crop(multiply_letters(word, fwd, bwd), window), crop(multiply_letters(word, bwd, fwd), window)};
}

/// Uniform random letter string of length 1..max_len.
inline ExpWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::bernoulli_distribution coin(0.5);
  std::vector<Run> factors;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) factors.push_back({coin(rng) ? Letter::star : Letter::plain, 1});
  return ExpWord::from_factors(factors);
}

/// Random element: a few random words with small Gaussian-integer
/// coefficients, sometimes with a unit part.
inline Element random_element(std::mt19937_64& rng, std::size_t max_len, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::bernoulli_distribution coin(0.25);
  Element x;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    GaussRational c(coeff(rng), coeff(rng));
    if (c.is_zero()) c = 1;
    x += c * Element::word(random_word(rng, max_len));
  }
  if (coin(rng)) x += Element::unit(GaussRational(coeff(rng)));
  return x;
}

}  // namespace ppi::testing
