#include "lineadm/arrangement.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace lineadm {

namespace {

// Scale so the first nonzero entry becomes 1; the representative is then
// unique, which makes equality and ordering canonical.
std::array<Rational, 3> normalize(std::array<Rational, 3> v, const char* what) {
  for (const Rational& x : v) {
    if (!x.is_zero()) {
      const Rational lead = x;
      for (Rational& y : v) y /= lead;
      return v;
    }
  }
  throw std::invalid_argument(std::string(what) + " coefficients are all zero");
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool lex_less(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string triple_str(const std::array<Rational, 3>& v, char open, char sep, char close) {
  std::string out;
  out += open;
  out += v[0].str();
  out += sep;
  out += v[1].str();
  out += sep;
  out += v[2].str();
  out += close;
  return out;
}

}  // namespace

ProjLine ProjLine::from_coeffs(Rational a, Rational b, Rational c) {
  return ProjLine{normalize({std::move(a), std::move(b), std::move(c)}, "line")};
}

ProjLine ProjLine::from_affine(const Rational& slope, const Rational& intercept) {
  // y = slope*x + intercept, homogenized as -slope*x + y - intercept*z = 0.
  return from_coeffs(-slope, Rational(1), -intercept);
}

ProjLine ProjLine::from_vertical(const Rational& c) {
  return from_coeffs(Rational(1), Rational(0), -c);
}

ProjLine ProjLine::at_infinity() {
  return from_coeffs(Rational(0), Rational(0), Rational(1));
}

std::string ProjLine::str() const { return triple_str(coeffs, '[', ',', ']'); }

bool operator<(const ProjLine& a, const ProjLine& b) { return lex_less(a.coeffs, b.coeffs); }

ProjPoint ProjPoint::from_coords(Rational x, Rational y, Rational z) {
  return ProjPoint{normalize({std::move(x), std::move(y), std::move(z)}, "point")};
}

ProjPoint ProjPoint::from_affine(const Rational& x, const Rational& y) {
  return from_coords(x, y, Rational(1));
}

std::string ProjPoint::str() const { return triple_str(coords, '(', ':', ')'); }

bool operator<(const ProjPoint& a, const ProjPoint& b) { return lex_less(a.coords, b.coords); }

bool incident(const ProjPoint& p, const ProjLine& l) {
  Rational dot;
  for (std::size_t i = 0; i < 3; ++i) dot += p.coords[i] * l.coeffs[i];
  return dot.is_zero();
}

ProjPoint intersect(const ProjLine& a, const ProjLine& b) {
  std::array<Rational, 3> c = cross(a.coeffs, b.coeffs);
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
    throw std::domain_error("degenerate pair");
  }
  return ProjPoint::from_coords(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  std::array<Rational, 3> c = cross(p.coords, q.coords);
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
    throw std::domain_error("degenerate pair");
  }
  return ProjLine::from_coeffs(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

Arrangement Arrangement::build(std::vector<ProjLine> lines,
                               std::optional<std::size_t> infinity_line) {
  if (lines.empty()) throw std::invalid_argument("arrangement needs at least one line");
  if (infinity_line && *infinity_line >= lines.size()) {
    throw std::invalid_argument("infinity line index out of range");
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) {
        throw std::invalid_argument("duplicate lines " + std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }

  std::map<ProjPoint, std::set<std::size_t>> incidences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      ProjPoint p = intersect(lines[i], lines[j]);
      auto& through = incidences[p];
      through.insert(i);
      through.insert(j);
    }
  }

  Arrangement arr;
  arr.lines_ = std::move(lines);
  arr.infinity_line_ = infinity_line;
  arr.points_.reserve(incidences.size());
  for (auto& [point, through] : incidences) {
    arr.points_.push_back(IncidencePoint{point, {through.begin(), through.end()}});
  }
  return arr;
}

std::vector<MultiplePoint> Arrangement::multiple_points(std::size_t min_mult) const {
  std::vector<MultiplePoint> out;
  for (const IncidencePoint& ip : points_) {
    if (ip.multiplicity() >= min_mult) {
      out.push_back(MultiplePoint{ip.point, ip.incident, ip.multiplicity()});
    }
  }
  return out;
}

bool Arrangement::point_covered(const MultiplePoint& p,
                                const std::vector<std::size_t>& cover) const {
  for (std::size_t j : cover) {
    if (j >= lines_.size()) throw std::out_of_range("cover line index out of range");
    for (std::size_t t : p.incident) {
      if (t == j) return true;
    }
  }
  return false;
}

AffineArrangement decone(const Arrangement& arr, std::size_t line) {
  if (line >= arr.size()) throw std::out_of_range("decone line index out of range");
  AffineArrangement out;
  out.removed_line = line;
  for (const IncidencePoint& ip : arr.points()) {
    bool on_removed = false;
    for (std::size_t j : ip.incident) {
      if (j == line) {
        on_removed = true;
        break;
      }
    }
    if (on_removed) {
      std::vector<std::size_t> cls;
      for (std::size_t j : ip.incident) {
        if (j != line) cls.push_back(j);
      }
      out.parallel_classes.push_back(std::move(cls));
    } else {
      out.affine_points.push_back(ip);
    }
  }
  return out;
}

}  // namespace lineadm
