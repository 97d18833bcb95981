#include "ppi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace ppi {

namespace {

using Params = std::vector<std::pair<std::string, long>>;
using Task = std::function<CheckResult()>;

unsigned pick(unsigned value, unsigned fallback) { return value != 0 ? value : fallback; }
std::size_t pick(std::size_t value, std::size_t fallback) { return value != 0 ? value : fallback; }

CheckResult boolean_check(std::string claim, Params params, bool pass, std::string detail = {}) {
  CheckResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.pass = pass;
  if (!pass) r.detail = std::move(detail);
  return r;
}

ExpWord random_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::bernoulli_distribution star(0.5);
  std::vector<Run> factors;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) factors.push_back({star(rng) ? Letter::star : Letter::plain, 1});
  return ExpWord::from_factors(factors);
}

// --- ppi-axioms --------------------------------------------------------------

std::vector<Element> partial_isometry_pool(std::mt19937_64& rng, std::span<const Rep> reps) {
  // Words alone are partial permutations, for which both sides of the product
  // criterion always hold. Rational rotations (3/5) x + (4/5) y of two words
  // give partial isometries with non-diagonal range projections.
  const auto words = normal_words(4);
  std::vector<Element> pool(words.begin(), words.end());
  const std::size_t target = 2 * words.size() + 100;
  const std::vector<std::pair<GaussRational, GaussRational>> mixes{
      {GaussRational(1), GaussRational(1)},
      {GaussRational(1), GaussRational(-1)},
      {GaussRational(mpq_class(3, 5)), GaussRational(mpq_class(4, 5))},
      {GaussRational(mpq_class(3, 5)), GaussRational(mpq_class(-4, 5))},
      {GaussRational(mpq_class(4, 5)), GaussRational(0, mpq_class(3, 5))},
  };
  std::uniform_int_distribution<std::size_t> any(0, words.size() - 1), mix(0, mixes.size() - 1);
  for (int t = 0; t < 20000 && pool.size() < target; ++t) {
    const auto& [a, b] = mixes[mix(rng)];
    const Element s = a * Element(words[any(rng)]) + b * Element(words[any(rng)]);
    if (!s.is_zero() && is_partial_isometry(s, reps)) pool.push_back(s);
  }
  return pool;
}

std::vector<Task> ppi_axioms(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned n = pick(c.n, 6u);
  const std::size_t samples = pick(c.samples, std::size_t{200});
  const OracleConfig oc = c.oracle;
  for (unsigned k = 1; k <= n; ++k) {
    tasks.emplace_back([k, oc] {
      const Element vk = power(k, 0);
      return equality_check("generator.power-partial-isometry", {{"k", k}}, vk * adjoint(vk) * vk, vk, oc);
    });
    tasks.emplace_back([k, oc] {
      return equality_check("initial-range.commute", {{"k", k}}, power(0, 1) * power(1, 0) * power(k, k),
                            power(k, k) * power(0, 1) * power(1, 0), oc);
    });
  }
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned b = 0; b <= a; ++b) {
      tasks.emplace_back([a, b, oc] {
        return equality_check("range-projections.decreasing", {{"n", a}, {"m", b}}, power(a, a) * power(b, b),
                              power(a, a), oc);
      });
      tasks.emplace_back([a, b, oc] {
        return equality_check("range-projections.decreasing", {{"n", a}, {"m", b}, {"reversed", 1}},
                              power(b, b) * power(a, a), power(a, a), oc);
      });
    }
  }

  // Product criterion in the 5 x 5 Jordan block.
  std::mt19937_64 rng(c.seed);
  const std::vector<Rep> j5{JordanRep{5}};
  const auto pool = partial_isometry_pool(rng, j5);
  std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    const Element u = pool[any(rng)], w = pool[any(rng)];
    tasks.emplace_back([t, u, w, j5] {
      const bool product = is_partial_isometry(u * w, j5);
      const bool commute = commutes(adjoint(u) * u, w * adjoint(w), j5);
      return boolean_check("product.partial-isometry-iff-commuting",
                           {{"sample", static_cast<long>(t)}, {"product_pi", product}, {"commute", commute}},
                           product == commute, "u = " + u.to_string() + ", v = " + w.to_string());
    });
  }

  std::mt19937_64 rng_e(c.seed + 1);
  for (std::size_t t = 0; t < samples / 2; ++t) {
    const Element x = [&] {
      Element acc;
      std::uniform_int_distribution<int> coef(-2, 2);
      for (int k = 0; k < 3; ++k) acc += GaussRational(coef(rng_e), coef(rng_e)) * Element::word(random_word(rng_e, 6));
      return acc;
    }();
    tasks.emplace_back([t, x, oc] {
      return equality_check("unit.left-identity", {{"sample", static_cast<long>(t)}}, e_elem() * x, x, oc);
    });
    tasks.emplace_back([t, x, oc] {
      return equality_check("unit.right-identity", {{"sample", static_cast<long>(t)}},
                            x * expand_unit(e_elem()), x, oc);
    });
  }
  tasks.emplace_back([] {
    const Element prod = expand_unit(p_elem() * ptilde_elem());
    return boolean_check("defect.orthogonal-exact", {}, prod.is_zero(), "p pt = " + prod.to_string());
  });
  tasks.emplace_back([] {
    const Element prod = expand_unit(ptilde_elem() * p_elem());
    return boolean_check("defect.orthogonal-exact", {{"reversed", 1}}, prod.is_zero(), "pt p = " + prod.to_string());
  });
  return tasks;
}

// --- projections ---------------------------------------------------------------

std::vector<Task> projections(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned n = pick(c.n, 5u);
  const OracleConfig oc = c.oracle;
  std::vector<std::pair<std::string, Element>> named{{"e", e_elem()}, {"p", p_elem()}, {"pt", ptilde_elem()}};
  for (unsigned k = 1; k <= n; ++k) {
    named.emplace_back("pi[" + std::to_string(k) + "]", pi(k));
    named.emplace_back("pit[" + std::to_string(k) + "]", pitilde(k));
    named.emplace_back("z[" + std::to_string(k) + "]", z(k));
  }
  for (std::size_t idx = 0; idx < named.size(); ++idx) {
    const Element x = named[idx].second;
    const long id = static_cast<long>(idx);
    tasks.emplace_back([x, id, oc] { return equality_check("projection.self-adjoint", {{"index", id}}, adjoint(x), x, oc); });
    tasks.emplace_back([x, id, oc] { return equality_check("projection.idempotent", {{"index", id}}, x * x, x, oc); });
  }
  tasks.emplace_back([oc] { return equality_check("defect.orthogonal", {}, p_elem() * ptilde_elem(), {}, oc); });
  for (unsigned k = 1; k <= n; ++k) {
    tasks.emplace_back([k, oc] {
      const Element u = p_elem() * power(k, 0) * ptilde_elem();
      return equality_check("pi.partial-isometry", {{"n", k}}, u * adjoint(u) * u, u, oc);
    });
    tasks.emplace_back([k, oc] {
      const Element u = p_elem() * power(k, 0) * ptilde_elem();
      return equality_check("pi.murray-von-neumann-initial", {{"n", k}}, adjoint(u) * u, pitilde(k), oc);
    });
    tasks.emplace_back([k, oc] {
      const Element u = p_elem() * power(k, 0) * ptilde_elem();
      return equality_check("pi.murray-von-neumann-range", {{"n", k}}, u * adjoint(u), pi(k), oc);
    });
    for (unsigned l = 1; l <= n; ++l) {
      if (l == k) continue;
      tasks.emplace_back([k, l, oc] {
        return equality_check("pi.mutually-orthogonal", {{"m", k}, {"n", l}}, pi(k) * pi(l), {}, oc);
      });
    }
  }
  return tasks;
}

// --- matrix units ----------------------------------------------------------------

std::vector<Task> matrix_units(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned top = pick(c.n, 4u);
  const OracleConfig oc = c.oracle;
  for (unsigned n = 1; n <= top; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= n; ++j) {
        tasks.emplace_back([=] {
          return equality_check("block.matrix-unit-adjoint", {{"n", n}, {"i", i}, {"j", j}},
                                adjoint(matrix_unit(n, i, j)), matrix_unit(n, j, i), oc);
        });
        for (unsigned k = 0; k <= n; ++k) {
          for (unsigned l = 0; l <= n; ++l) {
            tasks.emplace_back([=] {
              const Element rhs = j == k ? matrix_unit(n, i, l) : Element{};
              return equality_check("block.matrix-unit-product", {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                    matrix_unit(n, i, j) * matrix_unit(n, k, l), rhs, oc);
            });
          }
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> ideal_orthogonality(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned top = pick(c.n, 4u);
  const OracleConfig oc = c.oracle;
  for (unsigned m = 1; m <= top; ++m) {
    for (unsigned n = 1; n <= top; ++n) {
      if (m == n) continue;
      for (unsigned i = 0; i <= m; ++i) {
        for (unsigned j = 0; j <= m; ++j) {
          for (unsigned k = 0; k <= n; ++k) {
            for (unsigned l = 0; l <= n; ++l) {
              tasks.emplace_back([=] {
                return equality_check("blocks.cross-annihilate",
                                      {{"m", m}, {"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                      matrix_unit(m, i, j) * matrix_unit(n, k, l), {}, oc);
              });
            }
          }
        }
      }
    }
  }
  return tasks;
}

// --- rank one --------------------------------------------------------------------

std::vector<Task> rank_one(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned top = pick(c.n, 4u);
  const std::size_t samples = pick(c.samples, std::size_t{200});
  const std::size_t max_length = pick(c.max_length, std::size_t{10});
  const OracleConfig oc = c.oracle;
  std::mt19937_64 rng(c.seed);
  std::bernoulli_distribution ranged(1.0 / 3.0);
  for (std::size_t t = 0; t < samples; ++t) {
    ExpWord w = random_word(rng, max_length);
    if (ranged(rng)) {
      // v^a (v* v)^r v*^a, a word that reduces to a range projection.
      std::uniform_int_distribution<unsigned> ua(1, static_cast<unsigned>(std::max<std::size_t>(1, max_length / 2 - 1)));
      const unsigned a = ua(rng);
      std::vector<Run> fs{{Letter::plain, a}};
      std::uniform_int_distribution<unsigned> ur(0, 2);
      for (unsigned r = ur(rng); r > 0; --r) {
        fs.push_back({Letter::star, 1});
        fs.push_back({Letter::plain, 1});
      }
      fs.push_back({Letter::star, a});
      w = ExpWord::from_factors(fs);
    }
    for (unsigned n = 1; n <= top; ++n) {
      tasks.emplace_back([w, n, t, oc] {
        const Element x = Element::word(w);
        const Element sandwich = pi(n) * x * pi(n);
        int alpha = -1;
        if (oracle_zero(sandwich, oc)) {
          alpha = 0;
        } else if (oracle_equal(sandwich, pi(n), oc)) {
          alpha = 1;
        }
        bool range = false;
        for (unsigned a = 1; a <= n && !range; ++a) range = oracle_equal(x, power(a, a), oc);
        const bool pass = alpha >= 0 && (alpha == 1) == range;
        return boolean_check("pi.rank-one", {{"sample", static_cast<long>(t)}, {"n", n}, {"alpha", alpha}},
                             pass, "w = " + w.to_string());
      });
    }
  }
  return tasks;
}

// --- central ---------------------------------------------------------------------

std::vector<Task> central(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned top = pick(c.n, 5u);
  const OracleConfig oc = c.oracle;
  for (unsigned n = 1; n <= top; ++n) {
    tasks.emplace_back([n, oc] {
      return equality_check("z.commutes-with-generator", {{"n", n}}, z(n) * power(1, 0), power(1, 0) * z(n), oc);
    });
    tasks.emplace_back([n, oc] {
      return equality_check("z.commutes-with-adjoint", {{"n", n}}, z(n) * power(0, 1), power(0, 1) * z(n), oc);
    });
    tasks.emplace_back([n, oc] { return equality_check("z.self-adjoint", {{"n", n}}, adjoint(z(n)), z(n), oc); });
    tasks.emplace_back([n, oc] { return equality_check("z.idempotent", {{"n", n}}, z(n) * z(n), z(n), oc); });
  }
  return tasks;
}

// --- shift pair -------------------------------------------------------------------

std::vector<Task> pair_matrix_units(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned m = pick(c.m, 4u);
  // Every product below has words of at most 2 * (2m + 4) letters.
  const std::size_t window = c.oracle.window != 0 ? c.oracle.window : 2 * 2 * (2 * m + 4);
  const std::vector<Rep> pair{ShiftPairRep{window}};
  for (unsigned i = 0; i <= m; ++i) {
    for (unsigned j = 0; j <= m; ++j) {
      tasks.emplace_back([=] {
        return equality_check("pair.f-adjoint", {{"i", i}, {"j", j}}, adjoint(f(i, j)), f(j, i), pair);
      });
      tasks.emplace_back([=] {
        return equality_check("pair.range-word-sandwich", {{"j", i}, {"k", j}},
                              p_elem() * power(i, 0) * power(0, j) * p_elem(), i == j ? p_elem() : Element{}, pair);
      });
      for (unsigned k = 0; k <= m; ++k) {
        for (unsigned l = 0; l <= m; ++l) {
          tasks.emplace_back([=] {
            return equality_check("pair.f-matrix-unit-product", {{"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                  f(i, j) * f(k, l), j == k ? f(i, l) : Element{}, pair);
          });
          tasks.emplace_back([=] {
            return equality_check("pair.f-ftilde-orthogonal", {{"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                  f(i, j) * ftilde(k, l), {}, pair);
          });
        }
      }
    }
  }
  tasks.emplace_back([] {
    const unsigned nmax = 6;
    const auto found = detect_nv(ShiftPairRep{2 * (nmax + 8)}, nmax);
    return boolean_check("pair.nv-empty", {{"n_max", nmax}}, found.empty(),
                         "detected " + std::to_string(found.size()) + " indices");
  });
  return tasks;
}

// --- pi left multiplication ---------------------------------------------------

std::vector<Task> pi_left_multiplication(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const unsigned top = pick(c.n, 5u);
  const OracleConfig oc = c.oracle;
  for (unsigned n = 1; n <= top; ++n) {
    for (unsigned a = 0; a <= n + 2; ++a) {
      for (unsigned b = 0; b <= n + 2; ++b) {
        tasks.emplace_back([=] {
          const Element lhs = power(b, a) * pi(n);
          if (b <= a && a <= n) {
            return equality_check("pi.range-word-shift", {{"n", n}, {"a", a}, {"b", b}}, lhs, power(0, a - b) * pi(n),
                                  oc);
          }
          return equality_check("pi.range-word-annihilates", {{"n", n}, {"a", a}, {"b", b}}, lhs, {}, oc);
        });
      }
    }
  }
  return tasks;
}

// --- classification ----------------------------------------------------------------

std::vector<Task> classification(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const std::size_t max_length = pick(c.max_length, std::size_t{10});
  const OracleConfig oc = c.oracle;
  for (const NormalWord& w : normal_words(max_length)) {
    const Params params{{"shape", static_cast<long>(w.shape())},
                        {"a", w.a()},
                        {"b", w.b()},
                        {"c", w.c()}};
    const bool range = w.shape() == Shape::PP && w.a() == w.b();
    const bool initial = w.shape() == Shape::SP && w.a() == w.b();
    tasks.emplace_back([=] {
      const Element x = p_elem() * Element(w) * p_elem();
      if (range) {
        return boolean_check("defect.range-word-survives", params, !oracle_zero(x, oc), "w = " + w.to_string());
      }
      return equality_check("defect.word-annihilated", params, x, {}, oc);
    });
    tasks.emplace_back([=] {
      const Element x = ptilde_elem() * Element(w) * ptilde_elem();
      if (initial) {
        return boolean_check("codefect.initial-word-survives", params, !oracle_zero(x, oc), "w = " + w.to_string());
      }
      return equality_check("codefect.word-annihilated", params, x, {}, oc);
    });
  }
  return tasks;
}

// --- reduction soundness -------------------------------------------------------------

bool shape_ok(const NormalWord& w) {
  const unsigned a = w.a(), b = w.b(), c = w.c();
  switch (w.shape()) {
    case Shape::PP:
      return a + b >= 1 && c == 0;
    case Shape::SP:
      return a >= 1 && b >= 1 && c == 0;
    case Shape::PSP:
    case Shape::SPS:
      return std::min(a, c) > 0 && std::max(a, c) < b;
  }
  return false;
}

std::vector<Task> reduction_soundness(const VerifyConfig& c) {
  std::vector<Task> tasks;
  const std::size_t samples = pick(c.samples, std::size_t{1000});
  const std::size_t max_length = pick(c.max_length, std::size_t{12});
  const std::size_t window = c.oracle.window != 0 ? c.oracle.window : 32;
  const std::size_t n_max = c.oracle.n_max != 0 ? c.oracle.n_max : 14;
  std::mt19937_64 rng(c.seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const ExpWord w = random_word(rng, max_length);
    tasks.emplace_back([=] {
      const NormalWord r = reduce(w);
      std::vector<Rep> reps;
      for (std::size_t n = 2; n <= n_max; ++n) reps.emplace_back(JordanRep{n});
      reps.emplace_back(ShiftPairRep{window});
      for (const Rep& rep : reps) {
        if (eval_word(rep, w) != eval_word(rep, r)) {
          return boolean_check("reduce.sound", {{"sample", static_cast<long>(t)}}, false,
                               w.to_string() + " vs " + r.to_string() + " in " + describe(rep));
        }
      }
      return boolean_check("reduce.sound", {{"sample", static_cast<long>(t)}}, true);
    });
    tasks.emplace_back([=] {
      const NormalWord r = reduce(w);
      return boolean_check("reduce.shape", {{"sample", static_cast<long>(t)}},
                           shape_ok(r) && r.letters() <= w.letters(), w.to_string() + " -> " + r.to_string());
    });
  }
  return tasks;
}

using SuiteFn = std::vector<Task> (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"ppi-axioms", ppi_axioms},
      {"projections", projections},
      {"matrix-units", matrix_units},
      {"ideal-orthogonality", ideal_orthogonality},
      {"rank-one", rank_one},
      {"central", central},
      {"pair-matrix-units", pair_matrix_units},
      {"lemma16", pi_left_multiplication},
      {"classification", classification},
      {"reduction-soundness", reduction_soundness},
  };
  return r;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<NormalWord> normal_words(std::size_t max_letters) {
  std::vector<NormalWord> out;
  const unsigned top = static_cast<unsigned>(max_letters);
  for (unsigned a = 0; a <= top; ++a) {
    for (unsigned b = 0; a + b <= top; ++b) {
      if (a + b >= 1) out.push_back(NormalWord::pp(a, b));
      if (a >= 1 && b >= 1) out.push_back(NormalWord::sp(b, a));
    }
  }
  for (unsigned b = 2; b <= top; ++b) {
    for (unsigned a = 1; a < b; ++a) {
      for (unsigned c = 1; c < b && a + b + c <= top; ++c) {
        out.push_back(NormalWord::psp(a, b, c));
        out.push_back(NormalWord::sps(a, b, c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult equality_check(std::string claim, std::vector<std::pair<std::string, long>> params, const Element& lhs,
                           const Element& rhs, std::span<const Rep> reps) {
  CheckResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  try {
    const auto wit = oracle_witness(lhs, rhs, reps, false);
    r.pass = !wit.has_value();
    if (wit) r.witness = Witness{(lhs - rhs).to_string(), describe(wit->rep), wit->leg, wit->difference};
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

CheckResult equality_check(std::string claim, std::vector<std::pair<std::string, long>> params, const Element& lhs,
                           const Element& rhs, const OracleConfig& oracle) {
  const auto reps = oracle_reps(std::max(lhs.max_letters(), rhs.max_letters()), oracle);
  return equality_check(std::move(claim), std::move(params), lhs, rhs, reps);
}

VerifyReport run_suite(const std::string& name, const VerifyConfig& config) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& entry) { return entry.first == name; });
  if (it == reg.end()) throw UnknownSuite("unknown suite: " + name);

  const auto start = std::chrono::steady_clock::now();
  VerifyConfig inner = config;
  inner.oracle.parallel = false;
  const std::vector<Task> tasks = it->second(inner);

  VerifyReport report;
  report.suite = name;
  report.config = config;
  report.checks.resize(tasks.size());
  const long count = static_cast<long>(tasks.size());
  auto run_one = [&](long k) {
    try {
      report.checks[static_cast<std::size_t>(k)] = tasks[static_cast<std::size_t>(k)]();
    } catch (const std::exception& e) {
      CheckResult& r = report.checks[static_cast<std::size_t>(k)];
      r.claim = "internal";
      r.pass = false;
      r.detail = e.what();
    }
  };
  if (config.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) run_one(k);
  } else {
    for (long k = 0; k < count; ++k) run_one(k);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ppi
