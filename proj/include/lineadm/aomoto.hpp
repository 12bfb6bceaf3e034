#pragma once

// Degree <= 2 Orlik-Solomon model of the deconed arrangement and the
// cohomology dimensions of the complex (A^*, alpha wedge).

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "lineadm/arrangement.hpp"
#include "lineadm/local_system.hpp"
#include "lineadm/matrix.hpp"

namespace lineadm {

// Basis of A^2 after deconing: one element (p, l) per affine point p and
// each non-minimal line l through it. dim = sum over affine points of
// (multiplicity - 1).
class OSDegree2Basis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Element {
    std::size_t point;  // index into points()
    std::size_t line;   // original line index, not the minimal one at p
  };

  std::size_t base() const { return base_; }
  const std::vector<IncidencePoint>& points() const { return points_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t dim() const { return elements_.size(); }

  // Affine point where two surviving lines meet, or npos when they are
  // parallel (meet on the removed line).
  std::size_t point_of_pair(std::size_t u, std::size_t v) const;

  // Index of (point, line) in elements(); line must not be minimal at p.
  std::size_t element_index(std::size_t point, std::size_t line) const;

  friend OSDegree2Basis os_degree2_basis(const Arrangement& arr, std::size_t base);

 private:
  std::size_t base_ = 0;
  std::vector<IncidencePoint> points_;
  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> pair_point_;   // [u][v] -> point or npos
  std::vector<std::vector<std::size_t>> elem_lookup_;  // [point] -> element ids
};

// Throws std::out_of_range on a bad base line.
OSDegree2Basis os_degree2_basis(const Arrangement& arr, std::size_t base);

// Reduction of the product e_i e_j in the point basis, as (element, sign)
// pairs. Antisymmetric; parallel pairs reduce to zero. Throws
// std::invalid_argument when i == j or either equals the base line.
std::vector<std::pair<std::size_t, int>> reduce_product(const OSDegree2Basis& basis,
                                                        std::size_t i, std::size_t j);

struct AomotoResult {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t rank_d0 = 0;  // 0 or 1
  std::size_t rank_d1 = 0;
  std::size_t dim_a2 = 0;
};

// Betti numbers (1, n-1, dim A^2) of the complement, deconed at `base`.
// Requires at least 2 lines.
std::array<std::size_t, 3> betti(const Arrangement& arr, std::size_t base);

// Decones at the designated infinity line when present, else at line 0.
std::array<std::size_t, 3> betti(const Arrangement& arr);

// Cohomology dimensions of (A^*, alpha wedge) with the base residue
// eliminated through the sum-zero relation. Throws std::invalid_argument
// on size mismatch, std::out_of_range on a bad base.
AomotoResult aomoto_dims(const Arrangement& arr, const ResidueVector& alpha, std::size_t base);

// The matrix of d^1 = alpha wedge from A^1 to A^2 (rows: basis elements,
// columns: non-base lines ascending). Exposed for composition checks.
ExactMatrix aomoto_d1(const OSDegree2Basis& basis, const Arrangement& arr,
                      const ResidueVector& alpha);

}  // namespace lineadm
