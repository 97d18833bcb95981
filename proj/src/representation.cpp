#include "ppi/representation.hpp"

namespace ppi {

namespace {

struct LegRule {
  std::size_t dim;
  bool truncating;  // Jordan block: indices past dim - 1 vanish
  bool flipped;     // backward leg of the pair: v acts as V*
};

std::vector<LegRule> legs(const Rep& rep) {
  if (const auto* j = std::get_if<JordanRep>(&rep)) return {{j->n, true, false}};
  const auto& pair = std::get<ShiftPairRep>(rep);
  return {{pair.window, false, false}, {pair.window, false, true}};
}

std::vector<int> leg_action(const LegRule& leg, const ExpWord& w) {
  const auto& runs = w.runs();
  std::vector<int> target(leg.dim, -1);
  for (std::size_t col = 0; col < leg.dim; ++col) {
    long long k = static_cast<long long>(col);
    for (auto it = runs.rbegin(); it != runs.rend() && k >= 0; ++it) {
      const bool forward = (it->sign == Letter::plain) != leg.flipped;
      if (forward) {
        k += it->exponent;
        if (leg.truncating && k >= static_cast<long long>(leg.dim)) k = -1;
      } else {
        k -= it->exponent;
      }
    }
    if (k >= 0 && k < static_cast<long long>(leg.dim)) target[col] = static_cast<int>(k);
  }
  return target;
}

}  // namespace

std::string describe(const Rep& rep) {
  if (const auto* j = std::get_if<JordanRep>(&rep)) return "jordan(" + std::to_string(j->n) + ")";
  return "pair(" + std::to_string(std::get<ShiftPairRep>(rep).window) + ")";
}

std::size_t leg_count(const Rep& rep) { return std::holds_alternative<JordanRep>(rep) ? 1 : 2; }

std::size_t leg_dim(const Rep& rep) {
  if (const auto* j = std::get_if<JordanRep>(&rep)) return j->n;
  return std::get<ShiftPairRep>(rep).window;
}

void check_window(const Rep& rep, std::size_t letters) {
  const auto* pair = std::get_if<ShiftPairRep>(&rep);
  if (pair == nullptr) return;
  if (2 * letters > pair->window) {
    throw WindowError("pair window " + std::to_string(pair->window) + " too small for words of " +
                      std::to_string(letters) + " letters");
  }
}

std::vector<std::vector<int>> word_action(const Rep& rep, const ExpWord& w) {
  check_window(rep, w.letters());
  std::vector<std::vector<int>> out;
  for (const LegRule& leg : legs(rep)) out.push_back(leg_action(leg, w));
  return out;
}

std::vector<MatrixZ> eval_word(const Rep& rep, const ExpWord& w) {
  std::vector<MatrixZ> out;
  for (const auto& action : word_action(rep, w)) {
    MatrixZ m(action.size(), action.size());
    for (std::size_t col = 0; col < action.size(); ++col) {
      if (action[col] >= 0) m(static_cast<std::size_t>(action[col]), col) = 1;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MatrixZ> eval_word(const Rep& rep, const NormalWord& w) { return eval_word(rep, w.to_exp_word()); }

std::vector<QMatrix> eval_element(const Rep& rep, const Element& x) {
  check_window(rep, x.max_letters());
  const std::size_t dim = leg_dim(rep);
  std::vector<QMatrix> out(leg_count(rep), QMatrix(dim, dim));
  auto accumulate = [&](const ExpWord& w, const GaussRational& c) {
    const auto actions = word_action(rep, w);
    for (std::size_t leg = 0; leg < actions.size(); ++leg) {
      for (std::size_t col = 0; col < dim; ++col) {
        if (actions[leg][col] >= 0) out[leg](static_cast<std::size_t>(actions[leg][col]), col) += c;
      }
    }
  };
  if (!x.unit_coefficient().is_zero()) {
    const Element expansion = unit_expansion();
    for (const auto& [w, c] : expansion.terms()) accumulate(w.to_exp_word(), x.unit_coefficient() * c);
  }
  for (const auto& [w, c] : x.terms()) accumulate(w.to_exp_word(), c);
  return out;
}

std::set<unsigned> detect_nv(const Rep& rep, unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("detect_nv: n_max must be at least 1");
  std::set<unsigned> found;
  const Element p = p_elem();
  const Element pt = ptilde_elem();
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const QMatrix& leg : eval_element(rep, p * power(n, 0) * pt)) {
      if (!leg.is_zero()) {
        found.insert(n);
        break;
      }
    }
  }
  return found;
}

XiMap xi_map(unsigned n) {
  if (n < 1) throw std::invalid_argument("xi_map: n must be at least 1");
  XiMap m{n, {}, true};
  for (unsigned i = 0; i <= n; ++i) m.index_map.push_back(n - i);
  const Rep rep = JordanRep{n + 1};
  for (unsigned i = 0; i <= n && m.verified; ++i) {
    for (unsigned j = 0; j <= n && m.verified; ++j) {
      const QMatrix expected = QMatrix::unit(n + 1, m.index_map[i], m.index_map[j]);
      m.verified = eval_element(rep, matrix_unit(n, i, j)).front() == expected;
    }
  }
  return m;
}

}  // namespace ppi
