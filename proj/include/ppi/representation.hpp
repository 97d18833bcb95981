#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ppi/element.hpp"
#include "ppi/matrix.hpp"
#include "ppi/word.hpp"

namespace ppi {

/// The n x n finite section of the forward shift: ones on the subdiagonal.
struct JordanRep {
  std::size_t n;
  friend bool operator==(const JordanRep&, const JordanRep&) = default;
};

/// The pair (V, V*) of forward and backward shift, tracked on the first
/// `window` basis vectors of each leg. Leg matrices are the exact
/// compressions of the infinite operators to that window.
struct ShiftPairRep {
  std::size_t window;
  friend bool operator==(const ShiftPairRep&, const ShiftPairRep&) = default;
};

using Rep = std::variant<JordanRep, ShiftPairRep>;

class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// "jordan(5)", "pair(32)"
std::string describe(const Rep& rep);
std::size_t leg_count(const Rep& rep);
std::size_t leg_dim(const Rep& rep);

/// Throws WindowError unless words of `letters` letters fit the pair window
/// (2 * letters <= window). No-op for Jordan blocks.
void check_window(const Rep& rep, std::size_t letters);

/// Image of basis column j per leg: target row or -1. This is the sparse form
/// of eval_word and the kernel every evaluation goes through.
std::vector<std::vector<int>> word_action(const Rep& rep, const ExpWord& w);

std::vector<MatrixZ> eval_word(const Rep& rep, const ExpWord& w);
std::vector<MatrixZ> eval_word(const Rep& rep, const NormalWord& w);

/// Linear extension of eval_word. The unit is evaluated through its word
/// expansion, which is the identity for n >= 2 and on both pair legs.
std::vector<QMatrix> eval_element(const Rep& rep, const Element& x);

/// All 1 <= n <= n_max with p v^n p~ nonzero in the representation.
std::set<unsigned> detect_nv(const Rep& rep, unsigned n_max);

/// Index correspondence i -> n - i carrying block-n matrix units onto the
/// standard units of the (n+1)-dimensional Jordan block.
struct XiMap {
  unsigned n;
  std::vector<unsigned> index_map;
  /// eval(JordanRep(n+1), e_ij) == E_{n-i, n-j} for every i, j <= n.
  bool verified;
};

XiMap xi_map(unsigned n);

}  // namespace ppi
