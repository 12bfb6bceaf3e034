#include "lineadm/admissibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lineadm/classify.hpp"
#include "lineadm/errors.hpp"

namespace lineadm {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

ResidueVector shifted(const ResidueVector& alpha,
                      const std::vector<std::pair<std::size_t, Rational>>& deltas) {
  std::vector<QComplex> entries = alpha.entries();
  for (const auto& [j, d] : deltas) entries[j].re += d;
  return ResidueVector(std::move(entries));
}

void require_cover(const Arrangement& arr, const std::vector<std::size_t>& cover) {
  for (std::size_t j : cover) {
    if (j >= arr.size()) throw std::out_of_range("cover line index out of range");
  }
  for (std::size_t a = 0; a < cover.size(); ++a) {
    for (std::size_t b = a + 1; b < cover.size(); ++b) {
      if (cover[a] == cover[b]) throw std::invalid_argument("cover lines must be distinct");
    }
  }
  if (!covers(arr, cover)) {
    throw std::invalid_argument("cover does not cover the multiple points");
  }
}

// Builds the certificate and enforces soundness: a certifier that returns
// a non-witness is defective.
Certificate make_certificate(const Arrangement& arr, const LocalSystem& system,
                             ResidueVector alpha, Method method,
                             std::vector<std::size_t> cover) {
  VerifyResult vr = verify(arr, alpha, system);
  if (!vr.ok) {
    throw internal_error("certifier " + method_name(method) + " produced a non-witness: " +
                         vr.violations.front().describe());
  }
  std::vector<PointResidue> residues = point_residues(arr, alpha);
  return Certificate{std::move(alpha), std::move(residues), method, std::move(cover)};
}

// The proofs bound every multiple point q on the base line by b(q) < 1
// (and b(O) <= 0 for the concurrent-triple pivot); assert that literally.
void assert_base_line_bounds(const Certificate& cert, std::size_t l0,
                             const std::optional<ProjPoint>& pivot) {
  for (const PointResidue& pr : cert.point_residues) {
    if (!contains(pr.point.incident, l0)) continue;
    if (pivot && pr.point.point == *pivot) {
      if (pr.b > Rational(0)) {
        throw internal_error("proof bound violated: b(" + pr.point.point.str() +
                             ") = " + pr.b.str() + " > 0 at the pivot");
      }
    } else if (pr.b >= Rational(1)) {
      throw internal_error("proof bound violated: b(" + pr.point.point.str() +
                           ") = " + pr.b.str() + " >= 1 on the base line");
    }
  }
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kC0: return "C0";
    case Method::kC1: return "C1";
    case Method::kC2: return "C2";
    case Method::kC3Prop: return "C3_PROP";
    case Method::kSearch: return "SEARCH";
  }
  return "?";
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::kNotExpCompatible:
      return "entry " + std::to_string(line) + " does not reduce to the system class";
    case Kind::kPositiveIntegerEntry:
      return "a_" + std::to_string(line) + " = " + value.str() + " is a positive integer";
    case Kind::kPositiveIntegerPoint:
      return "a(" + (point ? point->point.str() : "?") + ") = " + value.str() +
             " is a positive integer";
  }
  return "?";
}

std::string ConditionFailed::describe() const {
  if (both_empty) {
    return "both difference sets are empty at q = " + q.point.str();
  }
  return "no extremal pair spans a line outside the arrangement at q = " + q.point.str();
}

VerifyResult verify(const Arrangement& arr, const ResidueVector& alpha,
                    const LocalSystem& system) {
  if (alpha.size() != arr.size() || system.size() != arr.size()) {
    throw std::invalid_argument("size mismatch");
  }
  VerifyResult out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j].im != system[j].im || !(alpha[j].re - system[j].re).is_integer()) {
      out.violations.push_back(
          Violation{Violation::Kind::kNotExpCompatible, j, std::nullopt, alpha[j]});
    }
  }
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (is_positive_integer(alpha[j])) {
      out.violations.push_back(
          Violation{Violation::Kind::kPositiveIntegerEntry, j, std::nullopt, alpha[j]});
    }
  }
  for (const PointResidue& pr : point_residues(arr, alpha)) {
    if (is_positive_integer(pr.a)) {
      out.violations.push_back(
          Violation{Violation::Kind::kPositiveIntegerPoint, 0, pr.point, pr.a});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

ExtremalData extremal(const Arrangement& arr, const ResidueVector& alpha, std::size_t line,
                      const std::optional<ProjPoint>& exclude_point,
                      std::optional<std::size_t> exclude_line) {
  if (alpha.size() != arr.size()) throw std::invalid_argument("size mismatch");
  if (line >= arr.size()) throw std::out_of_range("line index out of range");
  if (exclude_line && *exclude_line >= arr.size()) {
    throw std::out_of_range("excluded line index out of range");
  }

  // Lift shape: at most one entry (the base) with re outside [0,1), and
  // that one nonpositive. This makes a(p) a positive integer exactly when
  // b(p) is, the form the proofs argue about.
  std::size_t off_range = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const Rational& re = alpha[j].re;
    if (re >= Rational(0) && re < Rational(1)) continue;
    ++off_range;
    if (re > Rational(0) || off_range > 1) {
      throw std::invalid_argument("residue vector is not in lift shape");
    }
  }

  ExtremalData out;
  out.line = line;
  out.m = 0;
  for (const PointResidue& pr : point_residues(arr, alpha)) {
    if (!contains(pr.point.incident, line)) continue;
    if (exclude_line && contains(pr.point.incident, *exclude_line)) continue;
    if (exclude_point && pr.point.point == *exclude_point) continue;
    if (!is_positive_integer(pr.a)) continue;
    const Int& b = pr.b.num();
    if (b > out.m) {
      out.m = b;
      out.points.clear();
    }
    if (b == out.m) out.points.push_back(pr.point);
  }
  return out;
}

Certificate certify_c0_c1(const Arrangement& arr, const LocalSystem& system,
                          const std::vector<std::size_t>& cover) {
  if (cover.size() > 1) throw std::invalid_argument("cover must have size at most 1");
  require_cover(arr, cover);
  const std::size_t base = cover.empty() ? 0 : cover.front();
  ResidueVector alpha = standard_lift(system, base);
  const Method method = cover.empty() ? Method::kC0 : Method::kC1;
  return make_certificate(arr, system, std::move(alpha), method, cover);
}

Certificate certify_c2(const Arrangement& arr, const LocalSystem& system,
                       std::size_t l0, std::size_t l1) {
  require_cover(arr, {l0, l1});
  ResidueVector alpha = standard_lift(system, l0);
  ExtremalData ext = extremal(arr, alpha, l1, std::nullopt, l0);
  if (ext.m > 0) {
    const Rational m{ext.m};
    alpha = shifted(alpha, {{l1, -m}, {l0, m}});
  }
  Certificate cert = make_certificate(arr, system, std::move(alpha), Method::kC2, {l0, l1});
  assert_base_line_bounds(cert, l0, std::nullopt);
  return cert;
}

std::variant<Certificate, ConditionFailed> certify_c3_concurrent(
    const Arrangement& arr, const LocalSystem& system,
    std::size_t l0, std::size_t l1, std::size_t l2) {
  require_cover(arr, {l0, l1, l2});
  const ProjPoint pivot = intersect(arr.lines()[l0], arr.lines()[l1]);
  if (!incident(pivot, arr.lines()[l2])) {
    throw std::invalid_argument("non-concurrent triple");
  }

  const ResidueVector lift = standard_lift(system, l0);
  const ExtremalData e1 = extremal(arr, lift, l1, pivot, std::nullopt);
  const ExtremalData e2 = extremal(arr, lift, l2, pivot, std::nullopt);

  std::vector<std::pair<std::size_t, Rational>> deltas;
  if (e1.points.empty() || e2.points.empty()) {
    // One spike set is empty: the pair shift degenerates to a single
    // C2-style shift on the nonempty side, or to no shift at all.
    if (!e1.points.empty()) {
      const Rational m1{e1.m};
      deltas = {{l1, -m1}, {l0, m1}};
    } else if (!e2.points.empty()) {
      const Rational m2{e2.m};
      deltas = {{l2, -m2}, {l0, m2}};
    }
  } else {
    // Both spikes present: every multiple point q != O on the base line
    // must tolerate the double shift.
    for (const MultiplePoint& q : arr.multiple_points()) {
      if (!contains(q.incident, l0) || q.point == pivot) continue;
      auto off_pencil = [&](const std::vector<MultiplePoint>& pts) {
        std::vector<const MultiplePoint*> out;
        for (const MultiplePoint& p : pts) {
          bool on_line_through_q = false;
          for (std::size_t j : q.incident) {
            if (contains(p.incident, j)) {
              on_line_through_q = true;
              break;
            }
          }
          if (!on_line_through_q) out.push_back(&p);
        }
        return out;
      };
      const auto d1 = off_pencil(e1.points);
      const auto d2 = off_pencil(e2.points);
      if (!d1.empty() && !d2.empty()) continue;
      if (d1.empty() && d2.empty()) return ConditionFailed{q, true};
      const auto& witnesses = d1.empty() ? d2 : d1;
      const auto& partners = d1.empty() ? e1.points : e2.points;
      bool found = false;
      for (const MultiplePoint* w : witnesses) {
        for (const MultiplePoint& p : partners) {
          ProjLine join = line_through(w->point, p.point);
          if (std::find(arr.lines().begin(), arr.lines().end(), join) == arr.lines().end()) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return ConditionFailed{q, false};
    }
    const Rational m1{e1.m};
    const Rational m2{e2.m};
    deltas = {{l1, -m1}, {l2, -m2}, {l0, m1 + m2}};
  }

  Certificate cert = make_certificate(arr, system, shifted(lift, deltas), Method::kC3Prop,
                                      {l0, l1, l2});
  assert_base_line_bounds(cert, l0, pivot);
  return cert;
}

Verdict bounded_shift_search(const Arrangement& arr, const LocalSystem& system,
                             long long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const ResidueVector lift = standard_lift(system, 0);
  const std::size_t n = lift.size();

  // Under integer shifts only integer-valued entries and integer-valued
  // point sums can land in Z_{>0}; everything else stays a non-witness
  // condition no shift can create.
  struct IntConstraint {
    std::vector<std::size_t> lines;  // affected coordinates
    Int value;                       // must stay <= 0 after adding the shifts
  };
  std::vector<IntConstraint> constraints;
  for (std::size_t j = 0; j < n; ++j) {
    if (lift[j].im.is_zero() && lift[j].re.is_integer()) {
      constraints.push_back(IntConstraint{{j}, lift[j].re.num()});
    }
  }
  for (const PointResidue& pr : point_residues(arr, lift)) {
    if (pr.a.im.is_zero() && pr.a.re.is_integer()) {
      constraints.push_back(IntConstraint{pr.point.incident, pr.a.re.num()});
    }
  }

  std::vector<long long> shift(n, 0);
  auto admissible_shift = [&]() {
    for (const IntConstraint& c : constraints) {
      Int v = c.value;
      for (std::size_t j : c.lines) v += shift[j];
      if (v > 0) return false;
    }
    return true;
  };

  // Depth-first over shift vectors of total absolute value t, coordinates
  // ascending, with exact feasibility pruning; t runs over even numbers
  // (odd totals cannot sum to zero).
  bool found = false;
  auto dfs = [&](auto&& self, std::size_t pos, long long budget, long long sum) -> void {
    if (found) return;
    if (pos == n) {
      if (budget == 0 && sum == 0 && admissible_shift()) found = true;
      return;
    }
    const long long rest = static_cast<long long>(n - pos - 1);
    for (long long v = -bound; v <= bound && !found; ++v) {
      const long long nb = budget - (v < 0 ? -v : v);
      if (nb < 0) continue;
      const long long ns = sum + v;
      const long long mag = ns < 0 ? -ns : ns;
      if (mag > nb) continue;
      if ((nb - mag) % 2 != 0) continue;
      if (nb > rest * bound) continue;
      shift[pos] = v;
      self(self, pos + 1, nb, ns);
    }
  };

  const long long max_total = static_cast<long long>(n) * bound;
  for (long long t = 0; t <= max_total && !found; t += 2) {
    dfs(dfs, 0, t, 0);
  }

  if (!found) {
    Verdict v;
    v.admissible = false;
    v.attempts.push_back(AttemptNote{method_name(Method::kSearch), {},
                                     "no admissible shift within bound " +
                                         std::to_string(bound)});
    return v;
  }

  std::vector<std::pair<std::size_t, Rational>> deltas;
  for (std::size_t j = 0; j < n; ++j) {
    if (shift[j] != 0) deltas.emplace_back(j, Rational(shift[j]));
  }
  Certificate cert =
      make_certificate(arr, system, shifted(lift, deltas), Method::kSearch, {});
  Verdict v;
  v.admissible = true;
  v.certificate = std::move(cert);
  return v;
}

Verdict decide(const Arrangement& arr, const LocalSystem& system, long long search_bound) {
  const CkClassification cls = classify(arr);
  std::vector<AttemptNote> attempts;

  auto admissible_verdict = [&](Certificate cert) {
    Verdict v;
    v.admissible = true;
    v.certificate = std::move(cert);
    v.attempts = attempts;
    return v;
  };

  // For k <= 2 the first cover and ordering is guaranteed to certify; a
  // failure surfaces as internal_error from the certifier.
  if (cls.k <= 1) {
    for (const auto& cover : cls.minimal_covers) {
      return admissible_verdict(certify_c0_c1(arr, system, cover));
    }
  } else if (cls.k == 2) {
    for (const auto& cover : cls.minimal_covers) {
      return admissible_verdict(certify_c2(arr, system, cover[0], cover[1]));
    }
  } else if (cls.k == 3) {
    if (cls.concurrent_flag) {
      for (const auto& cover : cls.minimal_covers) {
        if (!concurrent(arr, cover)) continue;
        std::vector<std::size_t> perm = cover;
        do {
          auto res = certify_c3_concurrent(arr, system, perm[0], perm[1], perm[2]);
          if (auto* cert = std::get_if<Certificate>(&res)) {
            return admissible_verdict(std::move(*cert));
          }
          attempts.push_back(AttemptNote{method_name(Method::kC3Prop), perm,
                                         std::get<ConditionFailed>(res).describe()});
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    } else {
      attempts.push_back(
          AttemptNote{method_name(Method::kC3Prop), {}, "no concurrent minimal cover"});
    }
  }

  Verdict v = bounded_shift_search(arr, system, search_bound);
  v.attempts.insert(v.attempts.begin(), attempts.begin(), attempts.end());
  return v;
}

}  // namespace lineadm
