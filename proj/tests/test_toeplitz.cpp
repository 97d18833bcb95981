#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ppi/element.hpp"
#include "ppi/toeplitz.hpp"
#include "support/brute_force.hpp"

using namespace ppi;
using namespace ppi::toeplitz;

namespace {

Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

SymbolSeries t_power(int k) { return SymbolSeries({{k, 1.0}}); }

SymbolSeries random_trig(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::map<int, Complex> c;
  for (int k = -degree; k <= degree; ++k) c[k] = Complex(coef(rng), coef(rng));
  return SymbolSeries(c);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ExtractConfig exact_config() {
  ExtractConfig c;
  c.n_lo = 2;
  c.n_hi = 24;
  return c;
}

}  // namespace

TEST_CASE("toeplitz_section") {
  Matrix sub = Matrix::Zero(4, 4);
  for (int i = 1; i < 4; ++i) sub(i, i - 1) = 1.0;
  CHECK(toeplitz_section(t_power(1), 4) == sub);
  CHECK(toeplitz_section(t_power(0), 3) == Matrix::Identity(3, 3));
  const Matrix tri = toeplitz_section(t_power(1) + t_power(-1), 3);
  Matrix expect = Matrix::Zero(3, 3);
  expect(1, 0) = expect(0, 1) = expect(2, 1) = expect(1, 2) = 1.0;
  CHECK(tri == expect);
}

TEST_CASE("flip") {
  Matrix r2(2, 2);
  r2 << 0.0, 1.0, 1.0, 0.0;
  CHECK(flip(2) == r2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(flip(n) * flip(n) == Matrix::Identity(n, n));
    const Matrix a = toeplitz_section(t_power(1), n);
    CHECK(flip(n) * a * flip(n) == toeplitz_section(t_power(-1), n));
    CHECK(flip_conjugate(a) == flip(n) * a * flip(n));
  }
}

TEST_CASE("symbol series") {
  const SymbolSeries a({{-1, 2.0}, {0, 0.0}, {2, Complex(0, 1)}});
  CHECK(a.coefficients().size() == 2);
  CHECK(a.min_index() == -1);
  CHECK(a.max_index() == 2);
  CHECK(a.max_abs_index() == 2);
  CHECK(a.reflect().coeff(1) == Complex(2.0));
  CHECK(a.reflect().coeff(-2) == Complex(0, 1));
  const Complex t = std::polar(1.0, 0.7);
  CHECK(std::abs(a(t) - (2.0 / t + Complex(0, 1) * t * t)) < 1e-14);
  CHECK(std::abs((a * a)(t) - a(t) * a(t)) < 1e-13);
  CHECK((a + a).coeff(-1) == Complex(4.0));
}

TEST_CASE("sampled symbols") {
  const SymbolSeries e = SymbolSeries::from_named_sampler("exp", 64);
  CHECK(e.origin() == SymbolSeries::Origin::sampled);
  double factorial = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) factorial *= k;
    CHECK(std::abs(e.coeff(k) - 1.0 / factorial) < 1e-12);
  }
  CHECK(std::abs(e.coeff(-1)) < 1e-12);
  const SymbolSeries p = SymbolSeries::from_named_sampler("poisson", 256);
  for (int k = -6; k <= 6; ++k) CHECK(std::abs(p.coeff(k) - std::pow(0.5, std::abs(k))) < 1e-12);
  const SymbolSeries s = SymbolSeries::from_named_sampler("shift", 16);
  CHECK(s.distance(t_power(1)) < 1e-12);
  CHECK_THROWS(SymbolSeries::from_named_sampler("nope", 16));
  CHECK_THROWS(SymbolSeries::from_named_sampler("exp", 12));
}

TEST_CASE("corner_part") {
  Matrix k = Matrix::Zero(2, 2), l = Matrix::Zero(2, 2);
  k(0, 1) = 3.0;
  l(0, 0) = 5.0;
  l(1, 0) = 7.0;
  const Matrix c = corner_part(k, l, 4);
  CHECK(c(0, 1) == Complex(3.0));
  CHECK(c(3, 3) == Complex(5.0));
  CHECK(c(2, 3) == Complex(7.0));
  CHECK(flip_conjugate(corner_part(Matrix(), l, 4)) == corner_part(l, Matrix(), 4));
}

TEST_CASE("strong limits") {
  const ExtractConfig config = exact_config();
  const int m = 6;
  const Element vvs = Element::word(parse_word("v v*"));
  const StrongLimits a = strong_limits(FsSequence::from_element(vvs), m, config);
  CHECK(a.w == Matrix::Identity(m, m) - unit(m, 0, 0));
  CHECK(a.w_flipped == Matrix::Identity(m, m));

  const Element vsv = Element::word(parse_word("v* v"));
  const StrongLimits b = strong_limits(FsSequence::from_element(vsv), m, config);
  CHECK(b.w == Matrix::Identity(m, m));
  CHECK(b.w_flipped == Matrix::Identity(m, m) - unit(m, 0, 0));

  const SymbolSeries a2({{1, 1.0}, {0, 2.0}});
  const StrongLimits c = strong_limits(FsSequence::from_parts(a2), m, config);
  CHECK(c.w == toeplitz_section(a2, m));
}

TEST_CASE("decomposition of the canonical sequences") {
  const ExtractConfig config = exact_config();
  const Element v = power(1, 0);

  const Decomposition dv = extract_decomposition(FsSequence::from_element(v), config);
  CHECK(dv.symbol.distance(t_power(1)) == 0.0);
  CHECK(max_abs(dv.k) == 0.0);
  CHECK(max_abs(dv.l) == 0.0);
  CHECK(dv.max_residual(2) == 0.0);
  CHECK(dv.residuals.size() == 23);

  const Decomposition d1 = extract_decomposition(FsSequence::from_element(v * adjoint(v)), config);
  CHECK(d1.symbol.distance(t_power(0)) == 0.0);
  CHECK(d1.k == -unit(static_cast<int>(d1.k.rows()), 0, 0));
  CHECK(max_abs(d1.l) == 0.0);
  CHECK(d1.max_residual(2) == 0.0);

  const Decomposition d2 = extract_decomposition(FsSequence::from_element(adjoint(v) * v), config);
  CHECK(d2.symbol.distance(t_power(0)) == 0.0);
  CHECK(max_abs(d2.k) == 0.0);
  CHECK(d2.l == -unit(static_cast<int>(d2.l.rows()), 0, 0));
  CHECK(d2.max_residual(2) == 0.0);
}

TEST_CASE("quotient_symbol") {
  const Element v = power(1, 0);
  CHECK(quotient_symbol(FsSequence::from_element(v * adjoint(v))).distance(t_power(0)) == 0.0);
  CHECK(quotient_symbol(FsSequence::from_element(v)).distance(t_power(1)) == 0.0);
  const FsSequence s = FsSequence::from_element(v);
  CHECK(quotient_symbol(s + FsSequence([s](int n) -> Matrix { return -s(n); }, 1)).is_zero());
}

TEST_CASE("from_parts reassembles") {
  Matrix k = Matrix::Zero(3, 3), l = Matrix::Zero(2, 2);
  k(0, 2) = Complex(1, -1);
  k(2, 2) = 0.5;
  l(1, 0) = -2.0;
  const SymbolSeries a({{-2, 1.0}, {1, Complex(0, 3)}});
  const Decomposition d = extract_decomposition(FsSequence::from_parts(a, k, l));
  CHECK(d.symbol.distance(a) < 1e-14);
  CHECK(max_abs(d.k.topLeftCorner(3, 3) - k) < 1e-14);
  CHECK(max_abs(d.l.topLeftCorner(2, 2) - l) < 1e-14);
  CHECK(d.max_residual(6) < 1e-12);
  CHECK_THROWS_AS(FsSequence::from_parts(a, Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("reflection coherence") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const SymbolSeries a = random_trig(rng, 1 + t % 3);
    const FsSequence s = FsSequence::from_parts(a);
    CHECK(quotient_symbol(s.flipped()).distance(quotient_symbol(s).reflect()) < 1e-12);
    CHECK(quotient_symbol(s.flipped()).distance(a.reflect()) < 1e-12);
  }
}

TEST_CASE("symbol map is multiplicative") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const FsSequence s = FsSequence::from_parts(random_trig(rng, 2));
    const FsSequence u = FsSequence::from_parts(random_trig(rng, 3));
    const SymbolSeries lhs = quotient_symbol(s * u);
    CHECK(lhs.distance(quotient_symbol(s) * quotient_symbol(u)) < 1e-10);
  }
  // Products of the generator and its adjoint.
  const FsSequence v = FsSequence::from_element(power(1, 0));
  const FsSequence vs = FsSequence::from_element(power(0, 1));
  CHECK(quotient_symbol(vs * v * v).distance(t_power(1)) < 1e-10);
}

TEST_CASE("sampled symbol sequences") {
  for (const char* name : {"exp", "poisson"}) {
    const SymbolSeries a = SymbolSeries::from_named_sampler(name, 256);
    const Decomposition d = extract_decomposition(FsSequence::from_parts(a));
    CHECK(d.symbol.distance(a) < 1e-10);
    CHECK(d.max_residual(2) <= 1e-10);
  }
}

TEST_CASE("serial and parallel section builds agree") {
  const Element x = power(2, 1) + GaussRational(3) * power(0, 2) * p_elem();
  const FsSequence s = FsSequence::from_element(x);
  const auto a = build_sections_serial(s, 1, 20);
  const auto b = build_sections_parallel(s, 1, 20);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  ExtractConfig serial = exact_config();
  serial.parallel = false;
  const Decomposition ds = extract_decomposition(s, serial);
  const Decomposition dp = extract_decomposition(s, exact_config());
  CHECK(ds.k == dp.k);
  CHECK(ds.l == dp.l);
}

TEST_CASE("single words decompose exactly") {
  std::mt19937_64 rng(29);
  const ExtractConfig config = exact_config();
  for (int t = 0; t < 200; ++t) {
    const ExpWord w = ppi::testing::random_word(rng, 8);
    const NormalWord nw = reduce(w);
    const Decomposition d = extract_decomposition(FsSequence::from_element(Element(nw)), config);
    const int len = static_cast<int>(nw.letters());
    INFO(nw.to_string());
    CHECK(d.max_residual(len + 1) == 0.0);
  }
}

TEST_CASE("non-stabilizing sequences are reported") {
  // Entry (0,0) alternates with the parity of n.
  const FsSequence s([](int n) -> Matrix {
    Matrix m = Matrix::Zero(n, n);
    m(0, 0) = (n % 2 == 0) ? 1.0 : -1.0;
    return m;
  }, 1);
  try {
    extract_decomposition(s);
    FAIL("expected ExtractionError");
  } catch (const ExtractionError& e) {
    REQUIRE_FALSE(e.entries().empty());
    CHECK(e.entries().front().row == 0);
    CHECK(e.entries().front().col == 0);
  }
  ExtractConfig tiny;
  tiny.probe = 30;
  tiny.limit_hi = 31;
  CHECK_THROWS_AS(extract_decomposition(FsSequence::from_element(power(1, 0)), tiny), ExtractionError);
}
