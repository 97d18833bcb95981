#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ppi/element.hpp"

namespace ppi::toeplitz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Fourier coefficients k -> a_k of a continuous symbol on the unit circle.
class SymbolSeries {
 public:
  enum class Origin { exact, sampled };

  SymbolSeries() = default;
  /// Exact trigonometric polynomial; zero coefficients are dropped.
  explicit SymbolSeries(const std::map<int, Complex>& coeffs);

  /// Coefficients of `fn` computed from `fft_size` equispaced samples;
  /// magnitudes at or below `threshold` are treated as zero.
  static SymbolSeries from_sampler(const std::function<Complex(Complex)>& fn, int fft_size,
                                   double threshold = 1e-12);
  /// Builtins: "shift" (t), "laurent" (t + 1/t), "exp" (exp(t)),
  /// "poisson" (sum of 2^-|k| t^k).
  static SymbolSeries from_named_sampler(const std::string& name, int fft_size);

  Origin origin() const { return origin_; }
  const std::map<int, Complex>& coefficients() const { return coeffs_; }
  Complex coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_index() const;
  int max_index() const;
  int max_abs_index() const;

  /// a~(t) = a(1/t), i.e. a_k -> a_{-k}.
  SymbolSeries reflect() const;
  Complex operator()(Complex t) const;

  /// Pointwise product (coefficient convolution).
  friend SymbolSeries operator*(const SymbolSeries& x, const SymbolSeries& y);
  friend SymbolSeries operator+(const SymbolSeries& x, const SymbolSeries& y);

  /// Max coefficient difference.
  double distance(const SymbolSeries& other) const;

 private:
  std::map<int, Complex> coeffs_;
  Origin origin_ = Origin::exact;
};

/// T_n(a) = (a_{i-j}) for 0 <= i, j < n.
Matrix toeplitz_section(const SymbolSeries& a, int n);

/// The n x n reversal matrix R_n.
Matrix flip(int n);
/// R_n A R_n for square A of size n.
Matrix flip_conjugate(const Matrix& a);

/// A sequence n -> A_n of n x n matrices.
class FsSequence {
 public:
  using Generator = std::function<Matrix(int)>;

  /// `extent` bounds both the symbol degree and the size of the corner
  /// corrections; it drives the default probe size.
  FsSequence(Generator g, int extent) : gen_(std::move(g)), extent_(extent) {}

  /// A_n = image of x in JordanRep(n).
  static FsSequence from_element(const Element& x);
  /// A_n = T_n(a) + P_n K P_n + R_n L R_n.
  static FsSequence from_parts(const SymbolSeries& a, const Matrix& k = {}, const Matrix& l = {});

  Matrix operator()(int n) const { return gen_(n); }
  int extent() const { return extent_; }

  FsSequence flipped() const;
  friend FsSequence operator*(const FsSequence& x, const FsSequence& y);
  friend FsSequence operator+(const FsSequence& x, const FsSequence& y);

 private:
  Generator gen_;
  int extent_;
};

/// Matrices A_n for n in [n_lo, n_hi], built serially.
std::vector<Matrix> build_sections_serial(const FsSequence& s, int n_lo, int n_hi);
/// Same result, one OpenMP task per n.
std::vector<Matrix> build_sections_parallel(const FsSequence& s, int n_lo, int n_hi);

struct ExtractConfig {
  /// Probe corner size m; 0 picks 2 * (expected support) + 8.
  int probe = 0;
  /// Corner entries closer than this count as equal. Exact integer
  /// sequences stabilize with zero spread; the slack absorbs roundoff in
  /// products of floating sections.
  double tolerance = 1e-12;
  /// Residuals are reported for n in [n_lo, n_hi].
  int n_lo = 2;
  /// 0 means limit_hi.
  int n_hi = 0;
  /// Largest n used to detect the strong limits; 0 picks
  /// max(n_hi, probe + 4 * extent + stable_count + 4).
  int limit_hi = 0;
  /// Consecutive n over which corners must agree.
  int stable_count = 3;
  /// Coefficients at or below this magnitude are dropped from the symbol.
  double zero_threshold = 1e-12;
  bool parallel = true;
};

struct UnstableEntry {
  bool flipped;  // entry of the R_n A_n R_n corner
  int row, col;
  double spread;
};

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(const std::string& what, std::vector<UnstableEntry> entries)
      : std::runtime_error(what), entries_(std::move(entries)) {}
  const std::vector<UnstableEntry>& entries() const { return entries_; }

 private:
  std::vector<UnstableEntry> entries_;
};

struct StrongLimits {
  Matrix w;          // m x m corner of lim A_n
  Matrix w_flipped;  // m x m corner of lim R_n A_n R_n
  int stable_from;   // first n from which both corners stay within tolerance
};

/// Corners of the strong limits, detected by stabilization over the n range.
/// Throws ExtractionError listing the entries that do not settle.
StrongLimits strong_limits(const FsSequence& s, int probe, const ExtractConfig& config);

struct Residual {
  int n;
  double frobenius;
};

struct Decomposition {
  SymbolSeries symbol;
  Matrix k;
  Matrix l;
  std::vector<Residual> residuals;
  int stable_from = 0;

  /// max residual over n >= n0 (0 if none tested).
  double max_residual(int n0) const;
};

/// Splits A_n = T_n(a) + P_n K P_n + R_n L R_n + G_n.
Decomposition extract_decomposition(const FsSequence& s, const ExtractConfig& config = {});

/// The symbol component only.
SymbolSeries quotient_symbol(const FsSequence& s, const ExtractConfig& config = {});

/// P_n K P_n + R_n L R_n with K, L embedded or cropped to size n.
Matrix corner_part(const Matrix& k, const Matrix& l, int n);

}  // namespace ppi::toeplitz
