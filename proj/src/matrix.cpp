#include "lineadm/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lineadm {

QComplex& ExactMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return cells_[r * cols_ + c];
}

const QComplex& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return cells_[r * cols_ + c];
}

bool ExactMatrix::is_zero() const {
  for (const QComplex& z : cells_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

std::size_t rank(ExactMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    }
    const QComplex pv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      const QComplex factor = m.at(i, c) / pv;
      m.at(i, c) = QComplex();
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - rank(m); }

}  // namespace lineadm
