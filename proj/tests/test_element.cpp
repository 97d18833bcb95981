#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ppi/element.hpp"
#include "ppi/oracle.hpp"
#include "support/brute_force.hpp"

using namespace ppi;
using ppi::testing::jordan_word;

namespace {

Element w(const char* text) { return Element::word(parse_word(text)); }

// Brute-force images in JordanRep(n), built from explicit shift matrices.
QMatrix bf(std::size_t n, const char* text) { return to_rational(jordan_word(n, parse_word(text))); }
QMatrix bf_unit(std::size_t n) { return bf(n, "v* v") + bf(n, "v v*") - bf(n, "v* v v v*"); }
QMatrix bf_p(std::size_t n) { return bf_unit(n) - bf(n, "v* v"); }
QMatrix bf_pt(std::size_t n) { return bf_unit(n) - bf(n, "v v*"); }
QMatrix bf_power(std::size_t n, unsigned k, bool star) {
  QMatrix m = QMatrix::identity(n);
  for (unsigned i = 0; i < k; ++i) m = m * bf(n, star ? "v*" : "v");
  return m;
}

QMatrix jordan(std::size_t n, const Element& x) { return eval_element(JordanRep{n}, x).front(); }

bool pair_equal(const Element& x, const Element& y) {
  const std::size_t letters = std::max(x.max_letters(), y.max_letters());
  const std::vector<Rep> reps{ShiftPairRep{2 * letters + 2}};
  return oracle_equal(x, y, reps);
}

}  // namespace

TEST_CASE("add and scale") {
  const Element v = power(1, 0);
  CHECK((v + scale(-1, v)).is_zero());
  CHECK((e_elem() - e_elem()).is_zero());
  CHECK(adjoint(scale(GaussRational::i(), v)) == scale(GaussRational(0, -1), power(0, 1)));
  CHECK(scale(0, v).is_zero());
}

TEST_CASE("unit acts as identity and its expansion agrees") {
  const Element v = power(1, 0);
  CHECK(mul(e_elem(), v) == v);
  CHECK(mul(v, e_elem()) == v);
  CHECK(oracle_equal(mul(unit_expansion(), v), v));
  CHECK(oracle_equal(mul(v, unit_expansion()), v));
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(jordan(n, e_elem()) == QMatrix::identity(n));
    CHECK(bf_unit(n) == QMatrix::identity(n));
  }
  CHECK(eval_element(ShiftPairRep{10}, e_elem()) ==
        std::vector<QMatrix>{QMatrix::identity(10), QMatrix::identity(10)});
  // The two spellings of e agree because v*v and vv* commute.
  CHECK(oracle_equal(unit_expansion(), w("v* v") + w("v v*") - w("v v* v* v")));
}

TEST_CASE("defect projections") {
  const Element p = p_elem();
  CHECK(p.terms().size() == 2);
  CHECK(p == power(1, 1) - w("v v* v* v"));
  CHECK(mul(p, ptilde_elem()).is_zero());
  CHECK(mul(ptilde_elem(), p).is_zero());
  CHECK(oracle_equal(p, e_elem() - power(0, 1) * power(1, 0)));
  CHECK(oracle_equal(ptilde_elem(), e_elem() - power(1, 1)));
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(jordan(n, p) == bf_p(n));
    CHECK(jordan(n, p) == QMatrix::unit(n, n - 1, n - 1));
    CHECK(jordan(n, ptilde_elem()) == bf_pt(n));
    CHECK(jordan(n, ptilde_elem()) == QMatrix::unit(n, 0, 0));
  }
}

TEST_CASE("pi(n) blocks") {
  CHECK_THROWS_AS(pi(0), std::invalid_argument);
  CHECK_THROWS_AS(pitilde(0), std::invalid_argument);
  CHECK(jordan(3, pi(2)) == QMatrix::unit(3, 2, 2));
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::size_t m = 2; m <= 8; ++m) {
      // p v^n p~ v*^n p multiplied out as explicit matrices.
      const QMatrix expected = bf_p(m) * bf_power(m, n, false) * bf_pt(m) * bf_power(m, n, true) * bf_p(m);
      REQUIRE(jordan(m, pi(n)) == expected);
      CHECK(expected.is_zero() == (m != n + 1));
    }
  }
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(oracle_equal(mul(pi(n), pi(n)), pi(n)));
    CHECK(oracle_equal(adjoint(pi(n)), pi(n)));
    // Simplified form p (v^n v*^n - v^{n+1} v*^{n+1}).
    CHECK(oracle_equal(pi(n), p_elem() * (power(n, n) - power(n + 1, n + 1))));
  }
  CHECK(oracle_zero(mul(pi(2), pi(3))));
  CHECK(oracle_zero(mul(pitilde(1), pitilde(4))));
}

TEST_CASE("matrix units of block n") {
  CHECK_THROWS_AS(matrix_unit(2, 3, 0), std::out_of_range);
  CHECK(jordan(3, matrix_unit(2, 0, 1)) == QMatrix::unit(3, 2, 1));
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= n; ++j) {
        CHECK(oracle_equal(adjoint(matrix_unit(n, i, j)), matrix_unit(n, j, i)));
        for (unsigned k = 0; k <= n; ++k) {
          for (unsigned l = 0; l <= n; ++l) {
            const Element lhs = matrix_unit(n, i, j) * matrix_unit(n, k, l);
            CHECK(oracle_equal(lhs, j == k ? matrix_unit(n, i, l) : Element{}));
          }
        }
      }
    }
  }
  CHECK(oracle_zero(matrix_unit(1, 0, 1) * matrix_unit(3, 2, 0)));
}

TEST_CASE("central projections z(n)") {
  CHECK(jordan(3, z(2)) == QMatrix::identity(3));
  CHECK(jordan(5, z(2)).is_zero());
  const Element v = power(1, 0);
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(commutes(z(n), v));
    CHECK(oracle_equal(z(n), adjoint(z(n))));
    CHECK(oracle_equal(z(n) * z(n), z(n)));
  }
}

TEST_CASE("f and f~ families on the shift pair") {
  CHECK(f(0, 0) == p_elem());
  CHECK(ftilde(0, 0) == ptilde_elem());
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = 0; j <= 3; ++j) {
      CHECK(pair_equal(adjoint(f(i, j)), f(j, i)));
      for (unsigned k = 0; k <= 3; ++k) {
        for (unsigned l = 0; l <= 3; ++l) {
          CHECK(pair_equal(f(i, j) * f(k, l), j == k ? f(i, l) : Element{}));
          CHECK(pair_equal(f(i, j) * ftilde(k, l), Element{}));
        }
      }
    }
  }
}

TEST_CASE("is_partial_isometry") {
  const Element v = power(1, 0);
  CHECK(is_partial_isometry(v));
  CHECK_FALSE(is_partial_isometry(v + power(0, 1), std::vector<Rep>{JordanRep{3}}));
  for (unsigned n = 1; n <= 4; ++n) CHECK(is_partial_isometry(p_elem() * power(n, 0) * ptilde_elem()));
}

TEST_CASE("commutes") {
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(commutes(power(0, 1) * power(1, 0), power(n, n)));
    CHECK(commutes(p_elem(), power(n, n)));
  }
  CHECK_FALSE(commutes(power(1, 0), power(0, 1), std::vector<Rep>{JordanRep{3}}));
}

TEST_CASE("named projections are self-adjoint idempotents") {
  std::vector<Element> named{e_elem(), p_elem(), ptilde_elem()};
  for (unsigned n = 1; n <= 5; ++n) {
    named.push_back(pi(n));
    named.push_back(pitilde(n));
    named.push_back(z(n));
  }
  for (const Element& x : named) {
    CHECK(oracle_equal(x, adjoint(x)));
    CHECK(oracle_equal(x * x, x));
  }
  // p is not syntactically self-adjoint: its second word reduces to a PSP
  // whose adjoint is an SPS.
  CHECK_FALSE(adjoint(p_elem()) == p_elem());
}

TEST_CASE("decreasing commuting range projections") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      const Element big = power(n, n), small = power(m, m);
      CHECK(oracle_equal(big * small, big));
      CHECK(oracle_equal(small * big, big));
      const Element ibig = power(0, n) * power(n, 0), ismall = power(0, m) * power(m, 0);
      CHECK(oracle_equal(ibig * ismall, ibig));
      CHECK(oracle_equal(ismall * ibig, ibig));
    }
  }
}

TEST_CASE("classification: p w p vanishes unless w = v^a v*^a") {
  std::set<NormalWord> words;
  for (std::size_t len = 1; len <= 10; ++len) {
    for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
      std::vector<Run> fs;
      for (std::size_t i = 0; i < len; ++i) fs.push_back({(bits >> i) & 1 ? Letter::star : Letter::plain, 1});
      words.insert(reduce(ExpWord::from_factors(fs)));
    }
  }
  const Element p = p_elem(), pt = ptilde_elem();
  for (const NormalWord& word : words) {
    const bool range = word.shape() == Shape::PP && word.a() == word.b();
    const bool initial = word.shape() == Shape::SP && word.a() == word.b();
    if (!range) REQUIRE(oracle_zero(p * Element(word) * p));
    if (!initial) REQUIRE(oracle_zero(pt * Element(word) * pt));
    if (range) CHECK_FALSE(oracle_zero(p * Element(word) * p));
  }
}

TEST_CASE("Murray-von Neumann pairing of pi and pi~") {
  for (unsigned n = 1; n <= 5; ++n) {
    const Element u = p_elem() * power(n, 0) * ptilde_elem();
    CHECK(oracle_equal(adjoint(u) * u, pitilde(n)));
    CHECK(oracle_equal(u * adjoint(u), pi(n)));
  }
}

TEST_CASE("left multiplication of pi(n) by range words") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned a = 0; a <= n + 2; ++a) {
      for (unsigned b = 0; b <= n + 2; ++b) {
        const Element lhs = power(b, a) * pi(n);
        if (b <= a && a <= n) {
          CHECK(oracle_equal(lhs, power(0, a - b) * pi(n)));
        } else {
          CHECK(oracle_zero(lhs));
        }
      }
    }
  }
}

TEST_CASE("to_string") {
  CHECK(Element{}.to_string() == "0");
  CHECK(p_elem().to_string() == "v v* - v v*^2 v");
  CHECK((GaussRational(0, 2) * power(1, 0) + Element::unit(GaussRational(-1))).to_string() == "-e + (2i) v");
}
