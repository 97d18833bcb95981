#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppi/expression.hpp"
#include "ppi/oracle.hpp"

using namespace ppi;

namespace {

Element w(const char* text) { return Element::word(parse_word(text)); }

std::size_t error_position(const char* text) {
  try {
    parse_element(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("words") {
  CHECK(parse_element("v") == power(1, 0));
  CHECK(parse_element("v*") == power(0, 1));
  CHECK(parse_element("v* v^2 v*^3") == w("v v*^3"));
  CHECK(parse_element("v*v") == w("v* v"));
  CHECK(parse_element("v v* v") == power(1, 0));
  CHECK(parse_element("v^2 v*^3 v") == w("v^2 v*^3 v"));
  CHECK(parse_element("v * v") == power(2, 0));
  CHECK(parse_element("v^2*v") == power(3, 0));
}

TEST_CASE("named atoms") {
  CHECK(parse_element("e") == e_elem());
  CHECK(parse_element("p") == p_elem());
  CHECK(parse_element("pt") == ptilde_elem());
  CHECK(parse_element("pi[2]") == pi(2));
  CHECK(parse_element("pit[3]") == pitilde(3));
  CHECK(parse_element("z[2]") == z(2));
  CHECK(parse_element("eu[2,0,1]") == matrix_unit(2, 0, 1));
  CHECK(parse_element("f[1,2]") == f(1, 2));
  CHECK(parse_element("ft[ 0 , 3 ]") == ftilde(0, 3));
}

TEST_CASE("scalars and operators") {
  CHECK(parse_element("3") == Element::unit(3));
  CHECK(parse_element("1/2 + 3i") == Element::unit(GaussRational(mpq_class(1, 2), 3)));
  CHECK(parse_element("i v") == GaussRational::i() * power(1, 0));
  CHECK(parse_element("2i v") == GaussRational(0, 2) * power(1, 0));
  CHECK(parse_element("-v + v").is_zero());
  CHECK(parse_element("e - e").is_zero());
  CHECK(parse_element("adj(i v)") == GaussRational(0, -1) * power(0, 1));
  CHECK(parse_element("adj(v^2 v*)") == w("v v*^2"));
  CHECK(parse_element("(v + v*)^2") == w("v^2") + w("v v*") + w("v* v") + w("v*^2"));
  CHECK(parse_element("(1 - 2i) (v + e)") == GaussRational(1, -2) * (power(1, 0) + e_elem()));
  CHECK(oracle_zero(parse_element("p pt")));
  CHECK(oracle_equal(parse_element("e - v* v"), p_elem()));
  CHECK(parse_element("v - 2 v*") == power(1, 0) - GaussRational(2) * power(0, 1));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("") == 0);
  CHECK(error_position("v +") == 3);
  CHECK(error_position("v + q") == 4);
  CHECK(error_position("pi[0]") == 0);
  CHECK(error_position("eu[2,3,0]") == 0);
  CHECK(error_position("v^0") == 2);
  CHECK(error_position("(v") == 2);
  CHECK(error_position("v )") == 2);
  CHECK(error_position("f[1]") == 3);
  CHECK(error_position("1/0") == 0);
}
