#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ppi/expression.hpp"
#include "ppi/oracle.hpp"
#include "ppi/representation.hpp"
#include "ppi/toeplitz.hpp"
#include "ppi/verify.hpp"
#include "report.hpp"

namespace ppi::cli {

namespace {

namespace tz = ppi::toeplitz;

struct Options {
  bool json = false;
  // Shared settings; a --config file may provide any of them.
  unsigned nmax = 0;
  std::size_t window = 0;
  double tolerance = 1e-12;
  double zero_threshold = 1e-12;
  int n_lo = 2;
  int n_hi = 0;
  int limit_hi = 0;
  int probe = 0;
  int stable_count = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t max_length = 0;
  unsigned n = 0;
  unsigned m = 0;
  bool serial = false;

  std::string expr;
  std::string suite;
  std::string symbol;
  std::vector<std::size_t> jordan;
  std::optional<std::size_t> pair;
  bool pair_flag = false;
};

// Smallest leading square holding every nonzero entry.
tz::Matrix crop_support(const tz::Matrix& m) {
  Eigen::Index size = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != tz::Complex(0.0)) size = std::max(size, std::max(i, j) + 1);
    }
  }
  return m.topLeftCorner(size, size);
}

OracleConfig oracle_config(const Options& o) {
  OracleConfig c;
  c.n_max = o.nmax;
  c.window = o.window;
  c.parallel = !o.serial;
  return c;
}

tz::ExtractConfig extract_config(const Options& o) {
  tz::ExtractConfig c;
  c.probe = o.probe;
  c.tolerance = o.tolerance;
  c.n_lo = o.n_lo;
  c.n_hi = o.n_hi;
  c.limit_hi = o.limit_hi;
  c.stable_count = o.stable_count;
  c.zero_threshold = o.zero_threshold;
  c.parallel = !o.serial;
  return c;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Element x = parse_element(o.expr);
  if (o.json) {
    Json j;
    j["input"] = o.expr;
    j["reduced"] = x.to_string();
    Json evals = Json::array();
    for (std::size_t n : o.jordan) {
      evals.push_back({{"rep", describe(JordanRep{n})}, {"matrix", to_json(eval_element(JordanRep{n}, x).front())}});
    }
    j["evaluations"] = std::move(evals);
    out << dump(j);
    return ok;
  }
  out << x.to_string() << "\n";
  for (std::size_t n : o.jordan) {
    out << describe(JordanRep{n}) << ":\n" << render_matrix(eval_element(JordanRep{n}, x).front()) << "\n";
  }
  return ok;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Element x = parse_element(o.expr);
  std::vector<Rep> reps;
  for (std::size_t n : o.jordan) reps.emplace_back(JordanRep{n});
  if (o.pair) reps.emplace_back(ShiftPairRep{*o.pair});
  if (reps.empty()) {
    err << "eval: give --jordan N and/or --pair W\n";
    return usage_error;
  }
  Json all = Json::array();
  for (const Rep& rep : reps) {
    const auto legs = eval_element(rep, x);
    if (o.json) {
      Json legs_json = Json::array();
      for (const QMatrix& leg : legs) legs_json.push_back(to_json(leg));
      all.push_back({{"rep", describe(rep)}, {"legs", std::move(legs_json)}});
    } else {
      for (std::size_t k = 0; k < legs.size(); ++k) {
        out << describe(rep);
        if (legs.size() > 1) out << " leg " << k;
        out << ":\n" << render_matrix(legs[k]) << "\n";
      }
    }
  }
  if (o.json) out << dump({{"input", o.expr}, {"evaluations", std::move(all)}});
  return ok;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<tz::FsSequence> seq;
  if (!o.symbol.empty()) {
    if (!o.expr.empty()) {
      err << "decompose: give an expression or --symbol, not both\n";
      return usage_error;
    }
    Json j;
    try {
      j = Json::parse(o.symbol);
    } catch (const Json::parse_error& e) {
      err << "decompose: bad symbol JSON: " << e.what() << "\n";
      return usage_error;
    }
    const tz::SymbolSeries a = symbol_from_json(j);
    seq = tz::FsSequence::from_parts(a);
    if (j.contains("sampler")) {
      const int probe = o.probe > 0 ? o.probe : 2 * seq->extent() + 8;
      if (j.value("fft", 1024) < 8 * probe) {
        err << "decompose: fft size must be at least 8 x probe (" << 8 * probe << ")\n";
        return usage_error;
      }
    }
  } else if (!o.expr.empty()) {
    seq = tz::FsSequence::from_element(parse_element(o.expr));
  } else {
    err << "decompose: give an expression or --symbol\n";
    return usage_error;
  }

  tz::Decomposition d;
  try {
    d = tz::extract_decomposition(*seq, extract_config(o));
  } catch (const tz::ExtractionError& e) {
    if (o.json) {
      Json bad = Json::array();
      for (const auto& u : e.entries()) {
        bad.push_back({{"corner", u.flipped ? "flipped" : "direct"}, {"row", u.row}, {"col", u.col}, {"spread", u.spread}});
      }
      out << dump({{"error", e.what()}, {"unstable", std::move(bad)}});
    } else {
      out << "extraction failed: " << e.what() << "\n";
      for (const auto& u : e.entries()) {
        out << "  " << (u.flipped ? "flipped" : "direct") << " (" << u.row << ", " << u.col << ") spread "
            << u.spread << "\n";
      }
    }
    return verification_failed;
  }
  d.k = crop_support(d.k);
  d.l = crop_support(d.l);
  if (o.json) {
    out << dump(to_json(d));
    return ok;
  }
  out << "symbol: " << render_symbol(d.symbol) << "\n";
  out << "K:\n" << render_matrix(d.k) << "\n";
  out << "L:\n" << render_matrix(d.l) << "\n";
  out << "stable from n = " << d.stable_from << "\n";
  out << "residuals (Frobenius):";
  for (const auto& r : d.residuals) out << " " << r.n << ":" << r.frobenius;
  out << "\n";
  return ok;
}

int cmd_detect_nv(const Options& o, std::ostream& out, std::ostream& err) {
  if ((o.jordan.size() == 1) == o.pair_flag) {
    err << "detect-nv: give exactly one of --jordan N or --pair\n";
    return usage_error;
  }
  const unsigned n_max = o.nmax != 0 ? o.nmax : 6;
  // p v^n p~ has words of up to n + 8 letters.
  const Rep rep = o.pair_flag ? Rep{ShiftPairRep{o.window != 0 ? o.window : 2 * (n_max + 8)}}
                              : Rep{JordanRep{o.jordan.front()}};
  const auto nv = detect_nv(rep, n_max);
  if (o.json) {
    out << dump(nv_json(rep, n_max, nv));
  } else {
    out << render_set(nv) << "\n";
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig c;
  c.n = o.n;
  c.m = o.m;
  c.samples = o.samples;
  c.max_length = o.max_length;
  c.seed = o.seed;
  c.oracle = oracle_config(o);
  c.parallel = !o.serial;
  const VerifyReport r = run_suite(o.suite, c);
  if (o.json) {
    out << dump(to_json(r));
  } else {
    // One line per claim, failures listed below it.
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const CheckResult& check : r.checks) {
      if (!tally.count(check.claim)) order.push_back(check.claim);
      auto& [pass, total] = tally[check.claim];
      ++total;
      if (check.pass) ++pass;
    }
    out << "suite " << r.suite << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " passed\n";
    for (const std::string& claim : order) {
      const auto [pass, total] = tally[claim];
      out << "  " << (pass == total ? "PASS" : "FAIL") << " " << claim << " " << pass << "/" << total << "\n";
    }
    for (const CheckResult& check : r.checks) {
      if (check.pass) continue;
      out << "  failed " << check.claim;
      for (const auto& [k, v] : check.params) out << " " << k << "=" << v;
      if (check.witness) out << " witness " << check.witness->rep << " leg " << check.witness->leg << ": " << check.witness->element;
      if (!check.detail.empty()) out << " (" << check.detail << ")";
      out << "\n";
    }
  }
  return r.passed() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with a power partial isometry and its finite sections", "ppi"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file with shared settings; flags override it");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--nmax", o.nmax, "Largest Jordan block size for the oracle, or largest n for detect-nv");
  app.add_option("--window", o.window, "Shift-pair window");
  app.add_option("--tolerance", o.tolerance, "Corner stabilization tolerance");
  app.add_option("--zero-threshold", o.zero_threshold, "Drop symbol, K and L entries at or below this magnitude");
  app.add_option("--n-lo", o.n_lo, "First n for residuals");
  app.add_option("--n-hi", o.n_hi, "Last n for residuals");
  app.add_option("--limit-hi", o.limit_hi, "Last n used to detect strong limits");
  app.add_option("--probe", o.probe, "Probe corner size");
  app.add_option("--stable-count", o.stable_count, "Consecutive n over which corners must agree");
  app.add_option("--seed", o.seed, "Random seed for sampled suites");
  app.add_option("--samples", o.samples, "Samples for sampled suites");
  app.add_option("--max-length", o.max_length, "Longest word in sampled or enumerated suites");
  app.add_option("--n", o.n, "Block index bound for verify suites");
  app.add_option("--m", o.m, "Index bound for shift-pair suites");
  app.add_flag("--serial", o.serial, "Disable OpenMP fan-out");

  auto* reduce = app.add_subcommand("reduce", "Reduce an expression to normal words");
  reduce->fallthrough();
  reduce->add_option("expr", o.expr, "Expression")->required();
  reduce->add_option("--jordan", o.jordan, "Also print the image in JordanRep(N)");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in a representation");
  eval->fallthrough();
  eval->add_option("expr", o.expr, "Expression")->required();
  eval->add_option("--jordan", o.jordan, "JordanRep(N)");
  eval->add_option("--pair", o.pair, "ShiftPairRep(W)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));

  auto* decompose = app.add_subcommand("decompose", "Split a finite-section sequence into symbol, K, L and G_n");
  decompose->fallthrough();
  decompose->add_option("expr", o.expr, "Expression evaluated in JordanRep(n)");
  decompose->add_option("--symbol", o.symbol, "Symbol JSON instead of an expression");

  auto* nv = app.add_subcommand("detect-nv", "List n <= nmax with p v^n pt nonzero");
  nv->fallthrough();
  nv->add_option("--jordan", o.jordan, "JordanRep(N)")->expected(1);
  nv->add_flag("--pair", o.pair_flag, "Shift pair");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage_error;
  }

  try {
    if (*reduce) return cmd_reduce(o, out);
    if (*eval) return cmd_eval(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*decompose) return cmd_decompose(o, out, err);
    if (*nv) return cmd_detect_nv(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    if (!o.expr.empty()) err << "  " << o.expr << "\n  " << std::string(e.position(), ' ') << "^\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace ppi::cli
