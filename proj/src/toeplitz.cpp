#include "ppi/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "ppi/representation.hpp"

namespace ppi::toeplitz {

SymbolSeries::SymbolSeries(const std::map<int, Complex>& coeffs) {
  for (const auto& [k, c] : coeffs) {
    if (c != Complex(0.0)) coeffs_.emplace(k, c);
  }
}

namespace {

std::mutex fftw_planner_mutex;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

SymbolSeries SymbolSeries::from_sampler(const std::function<Complex(Complex)>& fn, int fft_size, double threshold) {
  if (!is_power_of_two(fft_size)) throw std::invalid_argument("fft size must be a power of two");
  std::vector<Complex> in(static_cast<std::size_t>(fft_size)), out(in.size());
  for (int j = 0; j < fft_size; ++j) {
    in[static_cast<std::size_t>(j)] = fn(std::polar(1.0, 2.0 * std::numbers::pi * j / fft_size));
  }
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex);
    plan = fftw_plan_dft_1d(fft_size, reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex);
    fftw_destroy_plan(plan);
  }
  std::map<int, Complex> coeffs;
  for (int j = 0; j < fft_size; ++j) {
    const Complex c = out[static_cast<std::size_t>(j)] / static_cast<double>(fft_size);
    if (std::abs(c) <= threshold) continue;
    const int k = j <= fft_size / 2 ? j : j - fft_size;
    coeffs.emplace(k, c);
  }
  SymbolSeries s(coeffs);
  s.origin_ = Origin::sampled;
  return s;
}

SymbolSeries SymbolSeries::from_named_sampler(const std::string& name, int fft_size) {
  std::function<Complex(Complex)> fn;
  if (name == "shift") {
    fn = [](Complex t) { return t; };
  } else if (name == "laurent") {
    fn = [](Complex t) { return t + 1.0 / t; };
  } else if (name == "exp") {
    fn = [](Complex t) { return std::exp(t); };
  } else if (name == "poisson") {
    fn = [](Complex t) {
      constexpr double r = 0.5;
      return Complex((1 - r * r) / (1 - 2 * r * t.real() + r * r));
    };
  } else {
    throw std::invalid_argument("unknown sampler: " + name);
  }
  return from_sampler(fn, fft_size);
}

Complex SymbolSeries::coeff(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

int SymbolSeries::min_index() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int SymbolSeries::max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

int SymbolSeries::max_abs_index() const { return std::max(std::abs(min_index()), std::abs(max_index())); }

SymbolSeries SymbolSeries::reflect() const {
  SymbolSeries r;
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(-k, c);
  r.origin_ = origin_;
  return r;
}

Complex SymbolSeries::operator()(Complex t) const {
  Complex sum = 0.0;
  for (const auto& [k, c] : coeffs_) sum += c * std::pow(t, k);
  return sum;
}

SymbolSeries operator*(const SymbolSeries& x, const SymbolSeries& y) {
  std::map<int, Complex> prod;
  for (const auto& [i, a] : x.coeffs_) {
    for (const auto& [j, b] : y.coeffs_) prod[i + j] += a * b;
  }
  SymbolSeries r(prod);
  r.origin_ = (x.origin_ == SymbolSeries::Origin::sampled || y.origin_ == SymbolSeries::Origin::sampled)
                  ? SymbolSeries::Origin::sampled
                  : SymbolSeries::Origin::exact;
  return r;
}

SymbolSeries operator+(const SymbolSeries& x, const SymbolSeries& y) {
  std::map<int, Complex> sum = x.coeffs_;
  for (const auto& [k, c] : y.coeffs_) sum[k] += c;
  SymbolSeries r(sum);
  r.origin_ = (x.origin_ == SymbolSeries::Origin::sampled || y.origin_ == SymbolSeries::Origin::sampled)
                  ? SymbolSeries::Origin::sampled
                  : SymbolSeries::Origin::exact;
  return r;
}

double SymbolSeries::distance(const SymbolSeries& other) const {
  double d = 0.0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, std::abs(c - other.coeff(k)));
  for (const auto& [k, c] : other.coeffs_) d = std::max(d, std::abs(c - coeff(k)));
  return d;
}

Matrix toeplitz_section(const SymbolSeries& a, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz_section: n must be at least 1");
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [k, c] : a.coefficients()) {
    if (std::abs(k) >= n) continue;
    for (int j = std::max(0, -k); j < n && j + k < n; ++j) m(j + k, j) = c;
  }
  return m;
}

Matrix flip(int n) {
  if (n < 1) throw std::invalid_argument("flip: n must be at least 1");
  Matrix r = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) r(i, n - 1 - i) = 1.0;
  return r;
}

Matrix flip_conjugate(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("flip_conjugate: square matrix expected");
  return a.reverse();
}

Matrix corner_part(const Matrix& k, const Matrix& l, int n) {
  Matrix r = Matrix::Zero(n, n);
  const int kk = std::min<int>(n, static_cast<int>(k.rows()));
  if (kk > 0) r.topLeftCorner(kk, kk) += k.topLeftCorner(kk, kk);
  const int ll = std::min<int>(n, static_cast<int>(l.rows()));
  if (ll > 0) r.bottomRightCorner(ll, ll) += l.topLeftCorner(ll, ll).reverse();
  return r;
}

FsSequence FsSequence::from_element(const Element& x) {
  auto gen = [x](int n) {
    const QMatrix q = eval_element(JordanRep{static_cast<std::size_t>(n)}, x).front();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
      }
    }
    return m;
  };
  return FsSequence(gen, static_cast<int>(x.max_letters()));
}

FsSequence FsSequence::from_parts(const SymbolSeries& a, const Matrix& k, const Matrix& l) {
  if (k.rows() != k.cols() || l.rows() != l.cols()) throw std::invalid_argument("K and L must be square");
  const int extent = std::max({a.max_abs_index(), static_cast<int>(k.rows()), static_cast<int>(l.rows())});
  return FsSequence([a, k, l](int n) -> Matrix { return toeplitz_section(a, n) + corner_part(k, l, n); },
                    extent);
}

FsSequence FsSequence::flipped() const {
  return FsSequence([g = gen_](int n) -> Matrix { return flip_conjugate(g(n)); }, extent_);
}

FsSequence operator*(const FsSequence& x, const FsSequence& y) {
  return FsSequence([gx = x.gen_, gy = y.gen_](int n) -> Matrix { return gx(n) * gy(n); }, x.extent_ + y.extent_);
}

FsSequence operator+(const FsSequence& x, const FsSequence& y) {
  return FsSequence([gx = x.gen_, gy = y.gen_](int n) -> Matrix { return gx(n) + gy(n); },
                    std::max(x.extent_, y.extent_));
}

std::vector<Matrix> build_sections_serial(const FsSequence& s, int n_lo, int n_hi) {
  std::vector<Matrix> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(s(n));
  return out;
}

std::vector<Matrix> build_sections_parallel(const FsSequence& s, int n_lo, int n_hi) {
  std::vector<Matrix> out(static_cast<std::size_t>(std::max(0, n_hi - n_lo + 1)));
  const int count = static_cast<int>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < count; ++idx) out[static_cast<std::size_t>(idx)] = s(n_lo + idx);
  return out;
}

namespace {

struct Range {
  int probe, n_lo, n_hi, limit_hi;
  int top() const { return std::max(n_hi, limit_hi); }
};

Range resolve(const FsSequence& s, const ExtractConfig& config) {
  Range r{};
  r.probe = config.probe > 0 ? config.probe : 2 * s.extent() + 8;
  r.n_lo = std::max(1, config.n_lo);
  const int auto_hi = std::max(config.n_hi, r.probe + 4 * s.extent() + config.stable_count + 4);
  r.limit_hi = config.limit_hi > 0 ? config.limit_hi : auto_hi;
  r.n_hi = config.n_hi > 0 ? config.n_hi : r.limit_hi;
  if (r.n_hi < r.n_lo) throw std::invalid_argument("empty n range");
  if (config.stable_count < 2) throw std::invalid_argument("stable_count must be at least 2");
  return r;
}

// sections[idx] is A_{n_lo + idx}.
StrongLimits limits_from_sections(const std::vector<Matrix>& sections, const Range& r, const ExtractConfig& config) {
  const int m = r.probe;
  const int first = std::max(r.n_lo, m);
  if (r.limit_hi - first + 1 < config.stable_count) {
    throw ExtractionError("n range too small for probe " + std::to_string(m) + ": need " +
                              std::to_string(config.stable_count) + " sections of size >= probe",
                          {});
  }
  auto corner = [&](int n, bool flipped) -> Matrix {
    const Matrix& a = sections[static_cast<std::size_t>(n - r.n_lo)];
    return flipped ? Matrix(a.reverse().topLeftCorner(m, m)) : Matrix(a.topLeftCorner(m, m));
  };
  const Matrix last = corner(r.limit_hi, false);
  const Matrix last_flipped = corner(r.limit_hi, true);

  // Walk down from n_hi while both corners stay within tolerance of the last.
  int stable_from = r.limit_hi;
  for (int n = r.limit_hi - 1; n >= first; --n) {
    const double dev = std::max((corner(n, false) - last).cwiseAbs().maxCoeff(),
                                (corner(n, true) - last_flipped).cwiseAbs().maxCoeff());
    if (dev > config.tolerance) break;
    stable_from = n;
  }

  if (r.limit_hi - stable_from + 1 < config.stable_count) {
    std::vector<UnstableEntry> bad;
    const int from = r.limit_hi - config.stable_count + 1;
    for (bool flipped : {false, true}) {
      const Matrix& ref = flipped ? last_flipped : last;
      Eigen::MatrixXd spread = Eigen::MatrixXd::Zero(m, m);
      for (int n = from; n < r.limit_hi; ++n) spread = spread.cwiseMax((corner(n, flipped) - ref).cwiseAbs());
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (spread(i, j) > config.tolerance) bad.push_back({flipped, i, j, spread(i, j)});
        }
      }
    }
    throw ExtractionError("strong limits did not stabilize over n in [" + std::to_string(from) + ", " +
                              std::to_string(r.limit_hi) + "]",
                          std::move(bad));
  }
  return {last, last_flipped, stable_from};
}

void clean(Matrix& m, double threshold) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) <= threshold) m(i, j) = 0.0;
    }
  }
}

}  // namespace

StrongLimits strong_limits(const FsSequence& s, int probe, const ExtractConfig& config) {
  ExtractConfig c = config;
  c.probe = probe;
  const Range r = resolve(s, c);
  const int lo = std::max(r.n_lo, r.probe);
  if (lo > r.limit_hi) throw ExtractionError("n range ends below probe " + std::to_string(r.probe), {});
  const Range sub{r.probe, lo, r.limit_hi, r.limit_hi};
  const auto sections =
      c.parallel ? build_sections_parallel(s, lo, r.limit_hi) : build_sections_serial(s, lo, r.limit_hi);
  return limits_from_sections(sections, sub, c);
}

double Decomposition::max_residual(int n0) const {
  double worst = 0.0;
  for (const Residual& res : residuals) {
    if (res.n >= n0) worst = std::max(worst, res.frobenius);
  }
  return worst;
}

Decomposition extract_decomposition(const FsSequence& s, const ExtractConfig& config) {
  const Range r = resolve(s, config);
  const auto sections =
      config.parallel ? build_sections_parallel(s, r.n_lo, r.top()) : build_sections_serial(s, r.n_lo, r.top());
  const StrongLimits lim = limits_from_sections(sections, r, config);
  const int m = r.probe;

  // Symbol from the middle row of the W corner: W(i, i - k) = a_k.
  const int mid = m / 2;
  std::map<int, Complex> coeffs;
  for (int j = 0; j < m; ++j) {
    const Complex c = lim.w(mid, j);
    if (std::abs(c) > config.zero_threshold) coeffs.emplace(mid - j, c);
  }

  Decomposition d;
  d.symbol = SymbolSeries(coeffs);
  d.k = lim.w - toeplitz_section(d.symbol, m);
  d.l = lim.w_flipped - toeplitz_section(d.symbol.reflect(), m);
  clean(d.k, config.zero_threshold);
  clean(d.l, config.zero_threshold);
  d.stable_from = lim.stable_from;

  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const Matrix& a = sections[static_cast<std::size_t>(n - r.n_lo)];
    const Matrix g = a - toeplitz_section(d.symbol, n) - corner_part(d.k, d.l, n);
    d.residuals.push_back({n, g.norm()});
  }
  return d;
}

SymbolSeries quotient_symbol(const FsSequence& s, const ExtractConfig& config) {
  return extract_decomposition(s, config).symbol;
}

}  // namespace ppi::toeplitz
