#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ppi/element.hpp"
#include "ppi/representation.hpp"

namespace ppi {

/// Which representations decide element equality. Zero means "derive from
/// the elements being compared": n_max = longest word + 4, and a pair window
/// of twice the longest word.
struct OracleConfig {
  std::size_t n_max = 0;
  std::size_t window = 0;
  bool parallel = true;
};

/// JordanRep(2..n_max) followed by the shift pair.
std::vector<Rep> oracle_reps(std::size_t letters, const OracleConfig& config = {});

struct OracleWitness {
  Rep rep;
  std::size_t leg;
  QMatrix difference;
};

/// Index of the first representation in which x is nonzero.
std::optional<std::size_t> first_nonvanishing_serial(const Element& x, std::span<const Rep> reps);
/// Same answer, with the representations evaluated by an OpenMP team.
std::optional<std::size_t> first_nonvanishing_parallel(const Element& x, std::span<const Rep> reps);

std::optional<OracleWitness> oracle_witness(const Element& x, const Element& y, std::span<const Rep> reps,
                                            bool parallel = true);
std::optional<OracleWitness> oracle_witness(const Element& x, const Element& y, const OracleConfig& config = {});

bool oracle_equal(const Element& x, const Element& y, std::span<const Rep> reps, bool parallel = true);
bool oracle_equal(const Element& x, const Element& y, const OracleConfig& config = {});

bool oracle_zero(const Element& x, const OracleConfig& config = {});

/// x x* x == x under the oracle.
bool is_partial_isometry(const Element& x, std::span<const Rep> reps);
bool is_partial_isometry(const Element& x, const OracleConfig& config = {});

/// xy == yx under the oracle.
bool commutes(const Element& x, const Element& y, std::span<const Rep> reps);
bool commutes(const Element& x, const Element& y, const OracleConfig& config = {});

}  // namespace ppi
