#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ppi::cli {

namespace {

std::string number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string complex_text(toeplitz::Complex c) {
  if (c.imag() == 0.0) return number(c.real());
  if (c.real() == 0.0) return number(c.imag()) + "i";
  return "(" + number(c.real()) + (c.imag() < 0 ? "-" : "+") + number(std::abs(c.imag())) + "i)";
}

}  // namespace

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const toeplitz::Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const toeplitz::SymbolSeries& s) {
  Json j = Json::object();
  for (const auto& [k, c] : s.coefficients()) j[std::to_string(k)] = Json::array({c.real(), c.imag()});
  return j;
}

Json to_json(const toeplitz::Decomposition& d) {
  Json j;
  j["symbol"] = to_json(d.symbol);
  j["K"] = to_json(d.k);
  j["L"] = to_json(d.l);
  j["stable_from"] = d.stable_from;
  Json res = Json::array();
  for (const auto& r : d.residuals) res.push_back({{"n", r.n}, {"frobenius", r.frobenius}});
  j["residuals"] = std::move(res);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["total"] = r.checks.size();
  j["failures"] = r.failures();
  Json config;
  config["n"] = r.config.n;
  config["m"] = r.config.m;
  config["samples"] = r.config.samples;
  config["max_length"] = r.config.max_length;
  config["seed"] = r.config.seed;
  config["n_max"] = r.config.oracle.n_max;
  config["window"] = r.config.oracle.window;
  config["parallel"] = r.config.parallel;
  j["config"] = std::move(config);
  j["wall_seconds"] = r.wall_seconds;
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json cj;
    cj["claim"] = c.claim;
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    cj["params"] = std::move(params);
    cj["status"] = c.pass ? "pass" : "fail";
    if (c.witness) {
      cj["witness"] = {{"element", c.witness->element},
                       {"rep", c.witness->rep},
                       {"leg", c.witness->leg},
                       {"difference", to_json(c.witness->difference)}};
    }
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json nv_json(const Rep& rep, unsigned n_max, const std::set<unsigned>& nv) {
  Json j;
  j["rep"] = describe(rep);
  j["n_max"] = n_max;
  j["nv"] = Json(std::vector<unsigned>(nv.begin(), nv.end()));
  return j;
}

toeplitz::SymbolSeries symbol_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("symbol must be a JSON object");
  if (j.contains("sampler")) {
    const int fft = j.value("fft", 1024);
    return toeplitz::SymbolSeries::from_named_sampler(j.at("sampler").get<std::string>(), fft);
  }
  std::map<int, toeplitz::Complex> coeffs;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw std::invalid_argument("symbol key '" + key + "' is not an integer");
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
      throw std::invalid_argument("symbol coefficient " + key + " must be [re, im]");
    }
    coeffs[k] = {value[0].get<double>(), value[1].get<double>()};
  }
  return toeplitz::SymbolSeries(coeffs);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_symbol(const toeplitz::SymbolSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : s.coefficients()) {
    std::string coef = complex_text(c);
    std::string term;
    if (k == 0) {
      term = coef;
    } else {
      const std::string t = k == 1 ? "t" : "t^" + std::to_string(k);
      term = coef == "1" ? t : coef == "-1" ? "-" + t : coef + " " + t;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string render_matrix(const toeplitz::Matrix& m) {
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) return "0";
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << complex_text(m(i, j));
    os << "]\n";
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

std::string render_matrix(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).to_string();
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os.str();
}

std::string render_set(const std::set<unsigned>& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  for (unsigned x : s) out += (out.size() > 1 ? ", " : "") + std::to_string(x);
  return out + "}";
}

}  // namespace ppi::cli
