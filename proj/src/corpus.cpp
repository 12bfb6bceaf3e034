#include "lineadm/corpus.hpp"

#include <stdexcept>

namespace lineadm {

namespace {

Rational q(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

ProjPoint pt(Rational x, Rational y, Rational z) {
  return ProjPoint::from_coords(std::move(x), std::move(y), std::move(z));
}

// Deleted B3 arrangement: x, x-y, y, x-z, y-z, x-y+z, x-y-z, z.
CorpusEntry make_suciu_deleted_b3() {
  CorpusEntry e;
  e.name = "suciu_deleted_b3";
  e.lines = {
      ProjLine::from_coeffs(q(1), q(0), q(0)),
      ProjLine::from_coeffs(q(1), q(-1), q(0)),
      ProjLine::from_coeffs(q(0), q(1), q(0)),
      ProjLine::from_coeffs(q(1), q(0), q(-1)),
      ProjLine::from_coeffs(q(0), q(1), q(-1)),
      ProjLine::from_coeffs(q(1), q(-1), q(1)),
      ProjLine::from_coeffs(q(1), q(-1), q(-1)),
      ProjLine::at_infinity(),
  };
  e.infinity_line = 7;
  e.documented_multiple_points = {
      {"O", pt(q(0), q(0), q(1)), {0, 1, 2}},
      {"q_2", pt(q(0), q(1), q(0)), {0, 3, 7}},
      {"q_1", pt(q(0), q(1), q(1)), {0, 4, 5}},
      {"p_2", pt(q(1), q(0), q(0)), {2, 4, 7}},
      {"p_2'", pt(q(1), q(0), q(1)), {2, 3, 6}},
      {"p_1'", pt(q(1), q(1), q(0)), {1, 5, 6, 7}},
      {"p_1", pt(q(1), q(1), q(1)), {1, 3, 4}},
  };
  e.documented_k = 3;
  return e;
}

// Eleven affine lines whose triple points are covered by the concurrent
// triple {0, 1, 2}.
CorpusEntry make_c3_all_admissible() {
  CorpusEntry e;
  e.name = "c3_all_admissible";
  e.lines = {
      ProjLine::from_vertical(q(0)),                 // x = 0
      ProjLine::from_affine(q(1, 2), q(3, 2)),       // y = (x+3)/2
      ProjLine::from_affine(q(-1, 2), q(3, 2)),      // y = -(x-3)/2
      ProjLine::from_affine(q(1), q(1)),             // y = x+1
      ProjLine::from_affine(q(-1), q(1)),            // y = -(x-1)
      ProjLine::from_affine(q(2), q(2)),             // y = 2(x+1)
      ProjLine::from_affine(q(-2), q(2)),            // y = -2(x-1)
      ProjLine::from_affine(q(3, 2), q(9, 2)),       // y = 3(x+3)/2
      ProjLine::from_affine(q(-3, 2), q(-9, 2)),     // y = -3(x+3)/2
      ProjLine::from_affine(q(5, 2), q(-15, 2)),     // y = 5(x-3)/2
      ProjLine::from_affine(q(-5, 2), q(15, 2)),     // y = -5(x-3)/2
  };
  e.documented_multiple_points = {
      {"q_2", pt(q(0), q(1), q(1, 2)), {0, 5, 6}},   // (0, 2)
      {"O", pt(q(0), q(1), q(2, 3)), {0, 1, 2}},     // (0, 3/2)
      {"q_1", pt(q(0), q(1), q(1)), {0, 3, 4}},      // (0, 1)
      {"p_1", pt(q(1), q(0), q(-1, 3)), {1, 7, 8}},  // (-3, 0)
      {"p_2", pt(q(1), q(0), q(1, 3)), {2, 9, 10}},  // (3, 0)
  };
  e.documented_k = 3;
  e.notes = {
      "the documented description announces 10 lines but lists 11 equations; all 11 are stored",
      "computed geometry has two triple points beyond the documented five: "
      "(-1/3, 4/3) on lines {1,4,5} and (1/3, 4/3) on lines {2,3,6}",
  };
  return e;
}

// Seven affine lines plus the line at infinity; the triple points admit
// three concurrent minimal covers through (0, 2).
CorpusEntry make_c3_partial() {
  CorpusEntry e;
  e.name = "c3_partial";
  e.lines = {
      ProjLine::from_vertical(q(0)),               // x = 0
      ProjLine::from_affine(q(-2), q(2)),          // y = -2(x-1)
      ProjLine::from_affine(q(2), q(2)),           // y = 2(x+1)
      ProjLine::from_affine(q(-1), q(1)),          // y = -(x-1)
      ProjLine::from_affine(q(1), q(1)),           // y = x+1
      ProjLine::from_affine(q(-1, 3), q(-1, 3)),   // y = -(x+1)/3
      ProjLine::from_affine(q(1, 3), q(-1, 3)),    // y = (x-1)/3
      ProjLine::at_infinity(),
  };
  e.infinity_line = 7;
  e.documented_multiple_points = {
      {"q_1", pt(q(0), q(1), q(-3)), {0, 5, 6}},   // (0, -1/3)
      {"O", pt(q(0), q(1), q(1, 2)), {0, 1, 2}},   // (0, 2)
      {"q_2", pt(q(0), q(1), q(1)), {0, 3, 4}},    // (0, 1)
      {"p_2", pt(q(1), q(0), q(-1)), {2, 4, 5}},   // (-1, 0)
      {"p_1", pt(q(1), q(0), q(1)), {1, 3, 6}},    // (1, 0)
  };
  e.documented_k = 3;
  e.notes = {
      "the documented coordinates for the triple point on lines {1,3,6} are (0,1); "
      "the computed intersection is (1,0), which is stored here",
  };
  return e;
}

const std::vector<CorpusEntry>& all_entries() {
  static const std::vector<CorpusEntry> entries = {
      make_suciu_deleted_b3(),
      make_c3_all_admissible(),
      make_c3_partial(),
  };
  return entries;
}

}  // namespace

Arrangement CorpusEntry::build() const { return Arrangement::build(lines, infinity_line); }

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CorpusEntry& e : all_entries()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const CorpusEntry& corpus_get(const std::string& name) {
  for (const CorpusEntry& e : all_entries()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown corpus entry '" + name + "'");
}

}  // namespace lineadm
