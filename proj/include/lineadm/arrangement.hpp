#pragma once

// Line arrangements in the complex projective plane: exact incidence data,
// multiple points, and deconing along a chosen line.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lineadm/rational.hpp"

namespace lineadm {

// Projective line a*x + b*y + c*z = 0, stored with the first nonzero
// coefficient normalized to 1.
struct ProjLine {
  std::array<Rational, 3> coeffs;

  // Normalizes; throws std::invalid_argument if all coefficients are zero.
  static ProjLine from_coeffs(Rational a, Rational b, Rational c);

  // Affine line y = slope*x + intercept.
  static ProjLine from_affine(const Rational& slope, const Rational& intercept);

  // Vertical affine line x = c.
  static ProjLine from_vertical(const Rational& c);

  // The line at infinity, z = 0.
  static ProjLine at_infinity();

  std::string str() const;

  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
  friend bool operator<(const ProjLine& a, const ProjLine& b);
};

// Projective point (x : y : z), same normalization as lines.
struct ProjPoint {
  std::array<Rational, 3> coords;

  static ProjPoint from_coords(Rational x, Rational y, Rational z);

  // Affine point (x, y), embedded as (x : y : 1).
  static ProjPoint from_affine(const Rational& x, const Rational& y);

  std::string str() const;  // "(x:y:z)"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);
};

bool incident(const ProjPoint& p, const ProjLine& l);

// Intersection of two distinct lines; throws std::domain_error("degenerate
// pair") when the lines coincide.
ProjPoint intersect(const ProjLine& a, const ProjLine& b);

// The unique line through two distinct points; throws std::domain_error on
// equal points.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

// An intersection point together with every arrangement line through it.
struct IncidencePoint {
  ProjPoint point;
  std::vector<std::size_t> incident;  // sorted ascending, size >= 2

  std::size_t multiplicity() const { return incident.size(); }
};

// A point of multiplicity >= 3.
struct MultiplePoint {
  ProjPoint point;
  std::vector<std::size_t> incident;
  std::size_t multiplicity = 0;

  friend bool operator==(const MultiplePoint& a, const MultiplePoint& b) {
    return a.point == b.point && a.incident == b.incident;
  }
};

// Result of removing one line to infinity: the surviving intersection
// points and the partition of surviving lines by their point on the
// removed line.
struct AffineArrangement {
  std::size_t removed_line = 0;
  std::vector<IncidencePoint> affine_points;  // points off the removed line
  std::vector<std::vector<std::size_t>> parallel_classes;
};

class Arrangement {
 public:
  // Validates distinctness and computes the full intersection point set.
  // Throws std::invalid_argument naming both indices on a duplicate line,
  // or if `lines` is empty or `infinity_line` is out of range.
  static Arrangement build(std::vector<ProjLine> lines,
                           std::optional<std::size_t> infinity_line = std::nullopt);

  std::size_t size() const { return lines_.size(); }
  const std::vector<ProjLine>& lines() const { return lines_; }

  // Every pairwise intersection point, in canonical coordinate order,
  // including double points. Partitions the line pairs.
  const std::vector<IncidencePoint>& points() const { return points_; }

  std::optional<std::size_t> infinity_line() const { return infinity_line_; }

  // Points of multiplicity >= min_mult, canonical order.
  std::vector<MultiplePoint> multiple_points(std::size_t min_mult = 3) const;

  // True iff the point lies on some line whose index is in `cover`.
  // Throws std::out_of_range on an invalid index.
  bool point_covered(const MultiplePoint& p, const std::vector<std::size_t>& cover) const;

 private:
  std::vector<ProjLine> lines_;
  std::vector<IncidencePoint> points_;
  std::optional<std::size_t> infinity_line_;
};

// Throws std::out_of_range on an invalid line index.
AffineArrangement decone(const Arrangement& arr, std::size_t line);

}  // namespace lineadm
