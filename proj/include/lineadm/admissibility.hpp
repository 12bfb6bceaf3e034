#pragma once

// Admissibility of a local system: a lift is a witness when no entry and
// no multiple-point residue sum is a positive integer. Certifiers construct
// witnesses for the k <= 2 classes and for concurrent triple covers; a
// bounded search over integer shifts is the fallback.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lineadm/arrangement.hpp"
#include "lineadm/local_system.hpp"

namespace lineadm {

struct Violation {
  enum class Kind {
    kNotExpCompatible,     // entry does not reduce to the system class
    kPositiveIntegerEntry, // a_j in Z_{>0}
    kPositiveIntegerPoint, // a(p) in Z_{>0} at a multiple point
  };
  Kind kind = Kind::kPositiveIntegerEntry;
  std::size_t line = 0;                // for the entry kinds
  std::optional<MultiplePoint> point;  // for the point kind
  QComplex value;

  std::string describe() const;
};

struct VerifyResult {
  bool ok = false;
  std::vector<Violation> violations;
};

// Checks the witness conditions for alpha against the system: classwise
// exp-compatibility, no entry in Z_{>0}, no multiple-point residue in
// Z_{>0}. Throws std::invalid_argument on size mismatch or nonzero sum.
VerifyResult verify(const Arrangement& arr, const ResidueVector& alpha, const LocalSystem& system);

// The spike data on one line: the largest positive-integer residue sum m
// over candidate multiple points, and the points attaining it.
struct ExtremalData {
  std::size_t line = 0;
  Int m;                            // max over candidates, 0 for none
  std::vector<MultiplePoint> points;  // attaining points, canonical order
};

// Candidates are multiplicity->=3 points on `line`, excluding any point on
// `exclude_line` and any point equal to `exclude_point`, whose residue sum
// is a positive integer. Requires alpha in lift shape: at most one entry
// with real part outside [0, 1), and that entry nonpositive. Throws
// std::out_of_range on bad indices, std::invalid_argument on shape.
ExtremalData extremal(const Arrangement& arr, const ResidueVector& alpha, std::size_t line,
                      const std::optional<ProjPoint>& exclude_point,
                      std::optional<std::size_t> exclude_line);

enum class Method { kC0, kC1, kC2, kC3Prop, kSearch };

// Serialized tags: C0, C1, C2, C3_PROP, SEARCH.
std::string method_name(Method m);

struct Certificate {
  ResidueVector alpha;
  std::vector<PointResidue> point_residues;
  Method method = Method::kC0;
  std::vector<std::size_t> cover_used;
};

// One declined attempt, recorded for UNKNOWN diagnostics.
struct AttemptNote {
  std::string method;
  std::vector<std::size_t> cover;
  std::string reason;
};

struct Verdict {
  bool admissible = false;
  std::optional<Certificate> certificate;  // present iff admissible
  std::vector<AttemptNote> attempts;
};

// Why a concurrent-triple certification declined: the multiple point q on
// the base line at which the per-point condition fails.
struct ConditionFailed {
  MultiplePoint q;
  // True: both difference sets are empty. False: only one is nonempty and
  // no witness pair spans a line outside the arrangement.
  bool both_empty = false;

  std::string describe() const;
};

// Cover of size <= 1: the standard lift based at the covering line (or at
// line 0 when the cover is empty) is already a witness. Throws
// std::invalid_argument when the cover does not cover the multiple points.
Certificate certify_c0_c1(const Arrangement& arr, const LocalSystem& system,
                          const std::vector<std::size_t>& cover);

// Ordered pair cover (l0, l1): lift at l0, then cancel the spike m_1 found
// on l1 off l0 by moving it onto the base entry. Throws
// std::invalid_argument on an invalid cover.
Certificate certify_c2(const Arrangement& arr, const LocalSystem& system,
                       std::size_t l0, std::size_t l1);

// Ordered concurrent triple (l0, l1, l2) through a common point O: spikes
// m_1, m_2 are computed on l1, l2 excluding O. If one spike set is empty a
// single shift suffices; otherwise every multiple point q != O on l0 must
// admit either both difference sets P_j minus Y_q nonempty, or a witness
// pair spanning a line outside the arrangement. Returns the doubly-shifted
// certificate or the failing q. Throws std::invalid_argument on a
// non-concurrent triple or an invalid cover.
std::variant<Certificate, ConditionFailed> certify_c3_concurrent(
    const Arrangement& arr, const LocalSystem& system,
    std::size_t l0, std::size_t l1, std::size_t l2);

// Tries every integer shift vector n with |n_j| <= bound and sum 0 applied
// to the standard lift based at line 0, ordered by total |n| then
// lexicographically, and returns the first witness found.
Verdict bounded_shift_search(const Arrangement& arr, const LocalSystem& system, long long bound);

// Full decision procedure: classify, run the matching certifier for
// k <= 2 (guaranteed to succeed), try every concurrent triple cover in
// every order for k = 3, and fall back to the bounded search.
Verdict decide(const Arrangement& arr, const LocalSystem& system, long long search_bound = 3);

}  // namespace lineadm
