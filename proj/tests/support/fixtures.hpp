#pragma once

// Shared constructors and pinned instances used across the test suites.

#include <initializer_list>
#include <string>
#include <vector>

#include "lineadm/arrangement.hpp"
#include "lineadm/local_system.hpp"
#include "lineadm/qcomplex.hpp"
#include "lineadm/rational.hpp"

namespace fixtures {

inline lineadm::Rational rat(const std::string& s) { return lineadm::Rational::parse(s); }

inline lineadm::QComplex qc(const std::string& re, const std::string& im = "0") {
  return {rat(re), rat(im)};
}

inline lineadm::ProjPoint pt(const std::string& x, const std::string& y,
                             const std::string& z) {
  return lineadm::ProjPoint::from_coords(rat(x), rat(y), rat(z));
}

inline lineadm::ProjLine affine(const std::string& slope, const std::string& intercept) {
  return lineadm::ProjLine::from_affine(rat(slope), rat(intercept));
}

inline lineadm::ProjLine vertical(const std::string& c) {
  return lineadm::ProjLine::from_vertical(rat(c));
}

inline lineadm::LocalSystem real_system(std::initializer_list<const char*> res) {
  std::vector<lineadm::QComplex> classes;
  for (const char* r : res) classes.push_back(qc(r));
  return lineadm::LocalSystem(std::move(classes));
}

inline lineadm::ResidueVector real_lift(std::initializer_list<const char*> res) {
  std::vector<lineadm::QComplex> entries;
  for (const char* r : res) entries.push_back(qc(r));
  return lineadm::ResidueVector(std::move(entries));
}

// Three generic lines, no multiple point.
inline lineadm::Arrangement triangle() {
  return lineadm::Arrangement::build({vertical("0"), affine("0", "0"), affine("1", "-1")});
}

// m lines through the origin plus nothing else: one multiplicity-m point.
inline lineadm::Arrangement pencil(std::size_t m) {
  std::vector<lineadm::ProjLine> lines{vertical("0")};
  for (std::size_t j = 1; j < m; ++j)
    lines.push_back(affine(std::to_string(j), "0"));
  return lineadm::Arrangement::build(std::move(lines));
}

// Five lines through the origin plus one avoiding it.
inline lineadm::Arrangement near_pencil6() {
  return lineadm::Arrangement::build(
      {vertical("0"),
       lineadm::ProjLine::from_coeffs(rat("1"), rat("-1"), rat("0")),
       lineadm::ProjLine::from_coeffs(rat("1"), rat("-2"), rat("0")),
       lineadm::ProjLine::from_coeffs(rat("1"), rat("-3"), rat("0")),
       affine("0", "0"),
       lineadm::ProjLine::from_coeffs(rat("1"), rat("1"), rat("-1"))});
}

// Six lines, two triple points (0,1) off each other: the smallest pinned
// k = 2 instance. Matches data/c2_demo.json.
inline lineadm::Arrangement c2_demo() {
  return lineadm::Arrangement::build({vertical("0"), affine("0", "0"), affine("1", "-1"),
                                      affine("-2", "2"), affine("1", "1"),
                                      affine("-2", "1")});
}

// Seven lines; adds a triple point on the intersection of the two
// covering lines, which exercises the base-line bound of the pair
// certifier.
inline lineadm::Arrangement c2_origin() {
  return lineadm::Arrangement::build({vertical("0"), affine("0", "0"), affine("3", "0"),
                                      affine("1", "-1"), affine("-2", "2"),
                                      affine("1", "1"), affine("-2", "1")});
}

inline lineadm::LocalSystem c2_demo_system() {
  return real_system({"1/2", "1/2", "1/4", "1/4", "1/4", "1/4"});
}

inline lineadm::LocalSystem c2_origin_system() {
  return real_system({"1/6", "1/2", "1/6", "1/4", "1/4", "1/3", "1/3"});
}

// The half-integer system pinned on the 8-line deleted-B3 corpus entry.
inline lineadm::LocalSystem rho_system() {
  return real_system({"0", "1/2", "1/2", "1/2", "0", "0", "0", "1/2"});
}

// rho twisted by a third root along every line; still undecided at
// search bound 3.
inline lineadm::LocalSystem rho_third_system() {
  return real_system({"1/3", "1/2", "1/6", "1/6", "1/3", "1/3", "2/3", "1/2"});
}

// Gaussian-rational system on the 8-line partial corpus entry whose pair
// of shifted point residues is pinned exactly.
inline lineadm::LocalSystem c3_partial_system() {
  return lineadm::LocalSystem({qc("2/3", "-1/2"), qc("1/2", "1/3"), qc("1/2", "1/5"),
                               qc("1/4", "-1/6"), qc("1/4", "-1/10"), qc("1/4", "-1/10"),
                               qc("1/4", "-1/6"), qc("1/3", "1/2")});
}

}  // namespace fixtures
