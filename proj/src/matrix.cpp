#include "ppi/matrix.hpp"

#include <utility>

namespace ppi {

QMatrix to_rational(const MatrixZ& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) r(i, j) = GaussRational(m(i, j));
    }
  }
  return r;
}

QMatrix adjoint(const QMatrix& m) {
  QMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  }
  return r;
}

std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    const GaussRational inv = GaussRational(1) / m(r, col);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const GaussRational factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace ppi
