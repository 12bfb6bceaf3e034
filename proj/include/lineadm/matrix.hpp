#pragma once

// Dense matrices over the Gaussian rationals with exact rank computation.

#include <cstddef>
#include <vector>

#include "lineadm/qcomplex.hpp"

namespace lineadm {

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QComplex& at(std::size_t r, std::size_t c);              // throws std::out_of_range
  const QComplex& at(std::size_t r, std::size_t c) const;  // throws std::out_of_range

  bool is_zero() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<QComplex> cells_;  // row-major
};

// Exact rank via Gaussian elimination; takes a working copy.
std::size_t rank(ExactMatrix m);

// cols - rank, the dimension of the right kernel.
std::size_t kernel_dim(const ExactMatrix& m);

}  // namespace lineadm
