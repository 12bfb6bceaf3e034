#pragma once

// Rank-one local systems and their exact residue lifts. A system is stored
// as one residue class per line with real part reduced into [0, 1); the
// product-one constraint requires the real parts to sum to an integer and
// the imaginary parts to sum to zero.

#include <cstddef>
#include <vector>

#include "lineadm/arrangement.hpp"
#include "lineadm/qcomplex.hpp"

namespace lineadm {

class LocalSystem {
 public:
  // Reduces each real part into [0, 1), then validates the product-one
  // constraint. Throws std::invalid_argument when it fails.
  explicit LocalSystem(std::vector<QComplex> classes);

  std::size_t size() const { return classes_.size(); }
  const std::vector<QComplex>& classes() const { return classes_; }
  const QComplex& operator[](std::size_t j) const { return classes_[j]; }

  friend bool operator==(const LocalSystem& a, const LocalSystem& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<QComplex> classes_;
};

// An exact lift (a_0, ..., a_n) of the residue classes with sum exactly 0.
class ResidueVector {
 public:
  // Throws std::invalid_argument when the entries do not sum to zero.
  explicit ResidueVector(std::vector<QComplex> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<QComplex>& entries() const { return entries_; }
  const QComplex& operator[](std::size_t j) const { return entries_[j]; }

  friend bool operator==(const ResidueVector& a, const ResidueVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<QComplex> entries_;
};

// The residue sum a(p) over the lines through a multiple point, and its
// real part b(p).
struct PointResidue {
  MultiplePoint point;
  QComplex a;
  Rational b;
};

// Lift with entry j = class j for j != base and the base entry chosen so
// the sum vanishes. Throws std::out_of_range on a bad base.
ResidueVector standard_lift(const LocalSystem& system, std::size_t base);

// True iff alpha reduces to the system classwise: equal imaginary parts
// and integral real-part differences. Throws std::invalid_argument on
// length mismatch.
bool exp_compatible(const ResidueVector& alpha, const LocalSystem& system);

// a(p) and b(p) at every multiplicity->=3 point, canonical point order.
// Throws std::invalid_argument on length mismatch.
std::vector<PointResidue> point_residues(const Arrangement& arr, const ResidueVector& alpha);

}  // namespace lineadm
