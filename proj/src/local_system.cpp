#include "lineadm/local_system.hpp"

#include <stdexcept>
#include <utility>

namespace lineadm {

LocalSystem::LocalSystem(std::vector<QComplex> classes) : classes_(std::move(classes)) {
  Rational re_sum;
  Rational im_sum;
  for (QComplex& c : classes_) {
    c.re = fractional_part(c.re);
    re_sum += c.re;
    im_sum += c.im;
  }
  // Monodromies multiply to 1 exactly when the residue classes sum to an
  // integer; reduction into [0,1) does not change that.
  if (!im_sum.is_zero() || !re_sum.is_integer()) {
    throw std::invalid_argument("local system violates the product-one constraint");
  }
}

ResidueVector::ResidueVector(std::vector<QComplex> entries) : entries_(std::move(entries)) {
  QComplex sum;
  for (const QComplex& e : entries_) sum += e;
  if (!sum.is_zero()) {
    throw std::invalid_argument("residue vector must sum to zero");
  }
}

ResidueVector standard_lift(const LocalSystem& system, std::size_t base) {
  if (base >= system.size()) throw std::out_of_range("lift base index out of range");
  std::vector<QComplex> entries = system.classes();
  QComplex others;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j != base) others += entries[j];
  }
  entries[base] = -others;
  return ResidueVector(std::move(entries));
}

bool exp_compatible(const ResidueVector& alpha, const LocalSystem& system) {
  if (alpha.size() != system.size()) throw std::invalid_argument("length mismatch");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j].im != system[j].im) return false;
    Rational diff = alpha[j].re - system[j].re;
    if (!diff.is_integer()) return false;
  }
  return true;
}

std::vector<PointResidue> point_residues(const Arrangement& arr, const ResidueVector& alpha) {
  if (alpha.size() != arr.size()) throw std::invalid_argument("length mismatch");
  std::vector<PointResidue> out;
  for (MultiplePoint& p : arr.multiple_points()) {
    QComplex a;
    for (std::size_t j : p.incident) a += alpha[j];
    Rational b = a.re;
    out.push_back(PointResidue{std::move(p), std::move(a), std::move(b)});
  }
  return out;
}

}  // namespace lineadm
