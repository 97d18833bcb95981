#include "ppi/oracle.hpp"

#include <algorithm>
#include <limits>

namespace ppi {

namespace {

bool vanishes(const Rep& rep, const Element& x) {
  for (const QMatrix& leg : eval_element(rep, x)) {
    if (!leg.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<Rep> oracle_reps(std::size_t letters, const OracleConfig& config) {
  const std::size_t n_max = config.n_max != 0 ? config.n_max : letters + 4;
  const std::size_t window = config.window != 0 ? config.window : std::max<std::size_t>(2 * letters, 2);
  std::vector<Rep> reps;
  for (std::size_t n = 2; n <= n_max; ++n) reps.emplace_back(JordanRep{n});
  reps.emplace_back(ShiftPairRep{window});
  return reps;
}

std::optional<std::size_t> first_nonvanishing_serial(const Element& x, std::span<const Rep> reps) {
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (!vanishes(reps[k], x)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_nonvanishing_parallel(const Element& x, std::span<const Rep> reps) {
  const long count = static_cast<long>(reps.size());
  long first = std::numeric_limits<long>::max();
  // Window errors must surface the same way as in the serial path.
  for (const Rep& rep : reps) check_window(rep, x.max_letters());
#pragma omp parallel for schedule(dynamic) reduction(min : first)
  for (long k = 0; k < count; ++k) {
    if (k < first && !vanishes(reps[static_cast<std::size_t>(k)], x)) first = std::min(first, k);
  }
  if (first == std::numeric_limits<long>::max()) return std::nullopt;
  return static_cast<std::size_t>(first);
}

std::optional<OracleWitness> oracle_witness(const Element& x, const Element& y, std::span<const Rep> reps,
                                            bool parallel) {
  const Element d = x - y;
  if (d.is_zero()) return std::nullopt;
  const auto k = parallel ? first_nonvanishing_parallel(d, reps) : first_nonvanishing_serial(d, reps);
  if (!k) return std::nullopt;
  const Rep& rep = reps[*k];
  auto legs = eval_element(rep, d);
  for (std::size_t leg = 0; leg < legs.size(); ++leg) {
    if (!legs[leg].is_zero()) return OracleWitness{rep, leg, std::move(legs[leg])};
  }
  return std::nullopt;
}

std::optional<OracleWitness> oracle_witness(const Element& x, const Element& y, const OracleConfig& config) {
  const auto reps = oracle_reps(std::max(x.max_letters(), y.max_letters()), config);
  return oracle_witness(x, y, reps, config.parallel);
}

bool oracle_equal(const Element& x, const Element& y, std::span<const Rep> reps, bool parallel) {
  return !oracle_witness(x, y, reps, parallel).has_value();
}

bool oracle_equal(const Element& x, const Element& y, const OracleConfig& config) {
  return !oracle_witness(x, y, config).has_value();
}

bool oracle_zero(const Element& x, const OracleConfig& config) { return oracle_equal(x, Element{}, config); }

bool is_partial_isometry(const Element& x, std::span<const Rep> reps) {
  return oracle_equal(x * adjoint(x) * x, x, reps);
}

bool is_partial_isometry(const Element& x, const OracleConfig& config) {
  return oracle_equal(x * adjoint(x) * x, x, config);
}

bool commutes(const Element& x, const Element& y, std::span<const Rep> reps) {
  return oracle_equal(x * y, y * x, reps);
}

bool commutes(const Element& x, const Element& y, const OracleConfig& config) {
  return oracle_equal(x * y, y * x, config);
}

}  // namespace ppi
