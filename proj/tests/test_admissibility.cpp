#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <variant>
#include <vector>

#include "lineadm/admissibility.hpp"
#include "lineadm/classify.hpp"
#include "lineadm/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace lineadm;
using fixtures::qc;
using fixtures::rat;

namespace {

Arrangement suciu() { return corpus_get("suciu_deleted_b3").build(); }

ResidueVector rho_lift() { return standard_lift(fixtures::rho_system(), 0); }

}  // namespace

TEST_CASE("verify flags the four positive point sums of the pinned lift") {
  Arrangement arr = suciu();
  VerifyResult res = verify(arr, rho_lift(), fixtures::rho_system());
  CHECK_FALSE(res.ok);
  REQUIRE(res.violations.size() == 4);
  const char* where[] = {"(1:0:0)", "(1:0:1)", "(1:1:0)", "(1:1:1)"};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(res.violations[i].kind == Violation::Kind::kPositiveIntegerPoint);
    REQUIRE(res.violations[i].point.has_value());
    CHECK(res.violations[i].point->point.str() == where[i]);
    CHECK(res.violations[i].value == QComplex(1));
    CHECK(res.violations[i].describe().find(where[i]) != std::string::npos);
  }
}

TEST_CASE("verify isolates a single bad point sum") {
  // Shift (2,-2,-2,1,0,0,0,1) applied to the pinned lift leaves every
  // entry and every point sum nonpositive except at (0:1:0).
  Arrangement arr = suciu();
  ResidueVector alpha = fixtures::real_lift({"0", "-3/2", "-3/2", "3/2", "0", "0", "0", "3/2"});
  CHECK(exp_compatible(alpha, fixtures::rho_system()));
  VerifyResult res = verify(arr, alpha, fixtures::rho_system());
  CHECK_FALSE(res.ok);
  REQUIRE(res.violations.size() == 1);
  CHECK(res.violations[0].kind == Violation::Kind::kPositiveIntegerPoint);
  CHECK(res.violations[0].point->point.str() == "(0:1:0)");
  CHECK(res.violations[0].value == QComplex(3));
}

TEST_CASE("verify reports entry violations before point violations") {
  Arrangement arr = suciu();
  ResidueVector alpha = fixtures::real_lift({"-3", "1/2", "1/2", "1/2", "1", "0", "0", "1/2"});
  VerifyResult res = verify(arr, alpha, fixtures::rho_system());
  CHECK_FALSE(res.ok);
  REQUIRE(res.violations.size() == 5);
  CHECK(res.violations[0].kind == Violation::Kind::kPositiveIntegerEntry);
  CHECK(res.violations[0].line == 4);
  CHECK(res.violations[0].value == QComplex(1));
  for (std::size_t i = 1; i < 5; ++i)
    CHECK(res.violations[i].kind == Violation::Kind::kPositiveIntegerPoint);
  CHECK(res.violations[1].point->point.str() == "(1:0:0)");
  CHECK(res.violations[1].value == QComplex(2));
}

TEST_CASE("verify treats incompatibility as a violation, not an error") {
  Arrangement arr = suciu();
  ResidueVector alpha =
      fixtures::real_lift({"-7/4", "1/4", "1/2", "1/2", "0", "0", "0", "1/2"});
  VerifyResult res = verify(arr, alpha, fixtures::rho_system());
  CHECK_FALSE(res.ok);
  REQUIRE(res.violations.size() == 4);
  CHECK(res.violations[0].kind == Violation::Kind::kNotExpCompatible);
  CHECK(res.violations[0].line == 0);
  CHECK(res.violations[1].kind == Violation::Kind::kNotExpCompatible);
  CHECK(res.violations[1].line == 1);
  CHECK(res.violations[2].kind == Violation::Kind::kPositiveIntegerPoint);
  CHECK(res.violations[2].point->point.str() == "(1:0:0)");
  CHECK(res.violations[3].point->point.str() == "(1:0:1)");

  CHECK_THROWS_AS(verify(arr, ResidueVector({qc("0")}), fixtures::rho_system()),
                  std::invalid_argument);
}

TEST_CASE("a handmade witness passes verify") {
  Arrangement arr = fixtures::c2_demo();
  LocalSystem sys = fixtures::c2_demo_system();
  ResidueVector witness = fixtures::real_lift({"-1/2", "-1/2", "1/4", "1/4", "1/4", "1/4"});
  VerifyResult res = verify(arr, witness, sys);
  CHECK(res.ok);
  CHECK(res.violations.empty());
}

TEST_CASE("extremal data on the pinned lift") {
  Arrangement arr = suciu();
  ResidueVector lift = rho_lift();
  const ProjPoint pivot = fixtures::pt("0", "0", "1");

  ExtremalData e1 = extremal(arr, lift, 1, pivot, std::nullopt);
  CHECK(e1.m == 1);
  REQUIRE(e1.points.size() == 2);
  CHECK(e1.points[0].point.str() == "(1:1:0)");
  CHECK(e1.points[1].point.str() == "(1:1:1)");

  ExtremalData e2 = extremal(arr, lift, 2, pivot, std::nullopt);
  CHECK(e2.m == 1);
  REQUIRE(e2.points.size() == 2);
  CHECK(e2.points[0].point.str() == "(1:0:0)");
  CHECK(e2.points[1].point.str() == "(1:0:1)");

  // Excluding by line: the pair instance spikes once on line 1 off line 0.
  Arrangement c2 = fixtures::c2_demo();
  ResidueVector c2lift = standard_lift(fixtures::c2_demo_system(), 0);
  ExtremalData e = extremal(c2, c2lift, 1, std::nullopt, 0);
  CHECK(e.m == 1);
  REQUIRE(e.points.size() == 1);
  CHECK(e.points[0].point.str() == "(1:0:1)");

  // No candidates at all.
  Arrangement tri = fixtures::triangle();
  ResidueVector tlift = standard_lift(fixtures::real_system({"1/2", "1/2", "0"}), 0);
  ExtremalData none = extremal(tri, tlift, 1, std::nullopt, std::nullopt);
  CHECK(none.m == 0);
  CHECK(none.points.empty());
}

TEST_CASE("extremal validates indices and lift shape") {
  Arrangement arr = fixtures::c2_demo();
  ResidueVector lift = standard_lift(fixtures::c2_demo_system(), 0);
  CHECK_THROWS_AS(extremal(arr, lift, 99, std::nullopt, std::nullopt), std::out_of_range);
  CHECK_THROWS_AS(extremal(arr, lift, 1, std::nullopt, 99), std::out_of_range);

  // Two entries below the unit interval.
  ResidueVector two_off = fixtures::real_lift({"-1/2", "-1/2", "1/4", "1/4", "1/4", "1/4"});
  CHECK_THROWS_AS(extremal(arr, two_off, 1, std::nullopt, std::nullopt),
                  std::invalid_argument);
  // A positive entry above it.
  ResidueVector pos_off = fixtures::real_lift({"3/2", "-3/2", "1/4", "1/4", "1/4", "-3/4"});
  CHECK_THROWS_AS(extremal(arr, pos_off, 1, std::nullopt, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("empty and singleton covers certify directly") {
  Arrangement tri = fixtures::triangle();
  LocalSystem tsys = fixtures::real_system({"1/2", "1/2", "0"});
  Certificate c0 = certify_c0_c1(tri, tsys, {});
  CHECK(c0.method == Method::kC0);
  CHECK(c0.cover_used.empty());
  CHECK(c0.alpha == standard_lift(tsys, 0));
  CHECK(verify(tri, c0.alpha, tsys).ok);

  Arrangement np = fixtures::near_pencil6();
  LocalSystem half6 = fixtures::real_system({"1/2", "1/2", "1/2", "1/2", "1/2", "1/2"});
  Certificate c1 = certify_c0_c1(np, half6, {0});
  CHECK(c1.method == Method::kC1);
  CHECK(c1.cover_used == std::vector<std::size_t>{0});
  CHECK(c1.alpha ==
        fixtures::real_lift({"-5/2", "1/2", "1/2", "1/2", "1/2", "1/2"}));
  REQUIRE(c1.point_residues.size() == 1);
  CHECK(c1.point_residues[0].a == qc("-1/2"));
  CHECK(verify(np, c1.alpha, half6).ok);

  // Line 5 misses the center, so it is not a cover.
  CHECK_THROWS_AS(certify_c0_c1(np, half6, {5}), std::invalid_argument);
}

TEST_CASE("pair covers certify with one spike cancellation") {
  Arrangement arr = fixtures::c2_demo();
  LocalSystem sys = fixtures::c2_demo_system();
  Certificate cert = certify_c2(arr, sys, 0, 1);
  CHECK(cert.method == Method::kC2);
  CHECK(cert.cover_used == std::vector<std::size_t>{0, 1});
  CHECK(cert.alpha == fixtures::real_lift({"-1/2", "-1/2", "1/4", "1/4", "1/4", "1/4"}));
  CHECK(verify(arr, cert.alpha, sys).ok);

  CHECK_THROWS_AS(certify_c2(arr, sys, 0, 4), std::invalid_argument);
}

TEST_CASE("pair cover with a triple point where the covers meet") {
  Arrangement arr = fixtures::c2_origin();
  LocalSystem sys = fixtures::c2_origin_system();
  Certificate cert = certify_c2(arr, sys, 0, 1);
  CHECK(cert.alpha ==
        fixtures::real_lift({"-5/6", "-1/2", "1/6", "1/4", "1/4", "1/3", "1/3"}));
  CHECK(verify(arr, cert.alpha, sys).ok);
  // The base-line sum at the covers' own triple point stays below one.
  for (const PointResidue& pr : cert.point_residues) {
    if (pr.point.point.str() == "(0:0:1)") CHECK(pr.a == qc("-7/6"));
  }
}

TEST_CASE("concurrent triples decline with the failing point") {
  Arrangement arr = suciu();
  LocalSystem rho = fixtures::rho_system();

  auto r012 = certify_c3_concurrent(arr, rho, 0, 1, 2);
  REQUIRE(std::holds_alternative<ConditionFailed>(r012));
  const ConditionFailed& f012 = std::get<ConditionFailed>(r012);
  CHECK(f012.q.point.str() == "(0:1:0)");
  CHECK(f012.both_empty);
  CHECK(f012.describe() == "both difference sets are empty at q = (0:1:0)");

  // Reordering the same cover fails elsewhere, without a free pair.
  auto r413 = certify_c3_concurrent(arr, rho, 4, 1, 3);
  REQUIRE(std::holds_alternative<ConditionFailed>(r413));
  const ConditionFailed& f413 = std::get<ConditionFailed>(r413);
  CHECK(f413.q.point.str() == "(0:1:1)");
  CHECK_FALSE(f413.both_empty);
  CHECK(f413.describe() ==
        "no extremal pair spans a line outside the arrangement at q = (0:1:1)");

  CHECK_THROWS_AS(certify_c3_concurrent(arr, rho, 0, 4, 6), std::invalid_argument);
}

TEST_CASE("concurrent triple certification with one empty spike side") {
  Arrangement arr = corpus_get("c3_partial").build();
  LocalSystem sys = fixtures::c3_partial_system();

  auto bad = certify_c3_concurrent(arr, sys, 0, 1, 2);
  REQUIRE(std::holds_alternative<ConditionFailed>(bad));
  CHECK(std::get<ConditionFailed>(bad).q.point.str() == "(0:1:-3)");
  CHECK(std::get<ConditionFailed>(bad).both_empty);

  auto good = certify_c3_concurrent(arr, sys, 1, 0, 2);
  REQUIRE(std::holds_alternative<Certificate>(good));
  const Certificate& cert = std::get<Certificate>(good);
  CHECK(cert.method == Method::kC3Prop);
  CHECK(cert.cover_used == std::vector<std::size_t>{1, 0, 2});
  CHECK(cert.alpha[1] == qc("-3/2", "1/3"));
  CHECK(cert.alpha[2] == qc("-1/2", "1/5"));
  CHECK(cert.alpha[0] == qc("2/3", "-1/2"));
  CHECK(verify(arr, cert.alpha, sys).ok);
}

TEST_CASE("double shift pins the residues at the off-pivot points") {
  Arrangement arr = corpus_get("c3_partial").build();
  LocalSystem sys = fixtures::c3_partial_system();
  ResidueVector lift = standard_lift(sys, 0);
  CHECK(lift[0] == qc("-7/3", "-1/2"));
  const ProjPoint pivot = fixtures::pt("0", "1", "1/2");

  ExtremalData e1 = extremal(arr, lift, 1, pivot, std::nullopt);
  ExtremalData e2 = extremal(arr, lift, 2, pivot, std::nullopt);
  CHECK(e1.m == 1);
  REQUIRE(e1.points.size() == 1);
  CHECK(e1.points[0].point.str() == "(1:0:1)");
  CHECK(e2.m == 1);
  REQUIRE(e2.points.size() == 1);
  CHECK(e2.points[0].point.str() == "(1:0:-1)");

  // Shift both spikes onto the base entry and recheck the two remaining
  // multiple points on the base line.
  std::vector<QComplex> shifted = lift.entries();
  shifted[1] -= QComplex(1);
  shifted[2] -= QComplex(1);
  shifted[0] += QComplex(2);
  ResidueVector alpha(shifted);
  CHECK(alpha[0] == qc("-1/3", "-1/2"));

  std::vector<PointResidue> res = point_residues(arr, alpha);
  REQUIRE(res.size() == 5);
  CHECK(res[0].point.point.str() == "(0:1:-3)");
  CHECK(res[0].a == qc("1/6", "-23/30"));
  CHECK(res[2].point.point.str() == "(0:1:1)");
  CHECK(res[2].a == qc("1/6", "-23/30"));
  CHECK(verify(arr, alpha, sys).ok);
}

TEST_CASE("bounded search returns the first shift in enumeration order") {
  Arrangement arr = fixtures::c2_demo();
  LocalSystem sys = fixtures::c2_demo_system();
  Verdict v = bounded_shift_search(arr, sys, 3);
  REQUIRE(v.admissible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->method == Method::kSearch);
  CHECK(v.certificate->cover_used.empty());
  // First admissible shift is (0,-1,0,0,0,1), total two.
  CHECK(v.certificate->alpha ==
        fixtures::real_lift({"-3/2", "-1/2", "1/4", "1/4", "1/4", "5/4"}));
  CHECK(verify(arr, v.certificate->alpha, sys).ok);

  // At bound 0 only the bare lift is tried, and it has a spike.
  Verdict tight = bounded_shift_search(arr, sys, 0);
  CHECK_FALSE(tight.admissible);
  REQUIRE(tight.attempts.size() == 1);
  CHECK(tight.attempts[0].reason == "no admissible shift within bound 0");

  CHECK_THROWS_AS(bounded_shift_search(arr, sys, -1), std::invalid_argument);
}

TEST_CASE("bounded search on the pinned complex instance") {
  Arrangement arr = corpus_get("c3_partial").build();
  LocalSystem sys = fixtures::c3_partial_system();
  Verdict v = bounded_shift_search(arr, sys, 3);
  REQUIRE(v.admissible);
  // First hit is the total-four shift (0,-1,-1,0,0,0,0,2).
  const ResidueVector& a = v.certificate->alpha;
  CHECK(a[0] == qc("-7/3", "-1/2"));
  CHECK(a[1] == qc("-1/2", "1/3"));
  CHECK(a[2] == qc("-1/2", "1/5"));
  CHECK(a[3] == qc("1/4", "-1/6"));
  CHECK(a[7] == qc("7/3", "1/2"));
}

TEST_CASE("undecided systems report their attempts") {
  Arrangement arr = suciu();

  Verdict v = decide(arr, fixtures::rho_system());
  CHECK_FALSE(v.admissible);
  CHECK_FALSE(v.certificate.has_value());
  REQUIRE(v.attempts.size() == 25);
  // Four concurrent covers, six orderings each, then the exhausted search.
  CHECK(v.attempts[0].method == "C3_PROP");
  CHECK(v.attempts[0].cover == std::vector<std::size_t>{0, 1, 2});
  CHECK(v.attempts[0].reason == "both difference sets are empty at q = (0:1:0)");
  CHECK(v.attempts[1].cover == std::vector<std::size_t>{0, 2, 1});
  CHECK(v.attempts[6].cover == std::vector<std::size_t>{0, 3, 7});
  CHECK(v.attempts[16].cover == std::vector<std::size_t>{4, 1, 3});
  CHECK(v.attempts[16].reason ==
        "no extremal pair spans a line outside the arrangement at q = (0:1:1)");
  CHECK(v.attempts[24].method == "SEARCH");
  CHECK(v.attempts[24].reason == "no admissible shift within bound 3");

  Verdict w = decide(arr, fixtures::rho_third_system());
  CHECK_FALSE(w.admissible);
  CHECK(w.attempts.size() == 25);
  CHECK(standard_lift(fixtures::rho_third_system(), 0)[0] == qc("-8/3"));
}

TEST_CASE("decide picks the matching certifier per class") {
  LocalSystem tsys = fixtures::real_system({"1/2", "1/2", "0"});
  Verdict t = decide(fixtures::triangle(), tsys);
  REQUIRE(t.admissible);
  CHECK(t.certificate->method == Method::kC0);
  CHECK(t.attempts.empty());

  Verdict np = decide(fixtures::near_pencil6(),
                      fixtures::real_system({"1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}));
  REQUIRE(np.admissible);
  CHECK(np.certificate->method == Method::kC1);
  CHECK(np.certificate->cover_used == std::vector<std::size_t>{0});

  Verdict c2 = decide(fixtures::c2_demo(), fixtures::c2_demo_system());
  REQUIRE(c2.admissible);
  CHECK(c2.certificate->method == Method::kC2);
  CHECK(c2.certificate->cover_used == std::vector<std::size_t>{0, 1});

  Verdict c3 = decide(corpus_get("c3_partial").build(), fixtures::c3_partial_system());
  REQUIRE(c3.admissible);
  CHECK(c3.certificate->method == Method::kC3Prop);
  CHECK(c3.certificate->cover_used == std::vector<std::size_t>{1, 0, 2});
  REQUIRE(c3.attempts.size() == 2);
  CHECK(c3.attempts[0].cover == std::vector<std::size_t>{0, 1, 2});
  CHECK(c3.attempts[1].cover == std::vector<std::size_t>{0, 2, 1});
  CHECK(c3.attempts[0].reason == "both difference sets are empty at q = (0:1:-3)");
}

TEST_CASE("every generated system on the eleven-line instance is admissible") {
  Arrangement arr = corpus_get("c3_all_admissible").build();
  gen::Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    LocalSystem sys = gen::rand_system(arr.size(), rng);
    Verdict v = decide(arr, sys);
    REQUIRE(v.admissible);
    CHECK(verify(arr, v.certificate->alpha, sys).ok);
  }
}

TEST_CASE("identity ordering is not universal on the eleven-line instance") {
  // The extremal points of this system are the two triple points off the
  // vertical axis that DO see the axis points through arrangement lines,
  // so the first ordering declines and a reordering certifies.
  Arrangement arr = corpus_get("c3_all_admissible").build();
  LocalSystem sys({qc("1/2"), qc("0"), qc("0"), qc("1/2"), qc("1/2"), qc("1/2"),
                   qc("1/2"), qc("1/2"), qc("0"), qc("0"), qc("0")});

  auto id = certify_c3_concurrent(arr, sys, 0, 1, 2);
  REQUIRE(std::holds_alternative<ConditionFailed>(id));
  CHECK(std::get<ConditionFailed>(id).q.point.str() == "(0:1:1/2)");
  CHECK(std::get<ConditionFailed>(id).both_empty);

  Verdict v = decide(arr, sys);
  REQUIRE(v.admissible);
  CHECK(v.certificate->method == Method::kC3Prop);
  CHECK(v.certificate->cover_used == std::vector<std::size_t>{1, 0, 2});
  CHECK(v.attempts.size() == 2);
  CHECK(v.certificate->alpha ==
        fixtures::real_lift({"1/2", "-2", "-1", "1/2", "1/2", "1/2", "1/2", "1/2", "0",
                             "0", "0"}));
}

TEST_CASE("decide certifies every generated low-cover instance") {
  gen::Rng rng(67);
  for (int t = 0; t < 60; ++t) {
    gen::Instance inst = gen::rand_low_k_instance(rng);
    LocalSystem sys = gen::rand_system(inst.arr.size(), rng);
    Verdict v = decide(inst.arr, sys);
    REQUIRE(v.admissible);
    const Certificate& cert = *v.certificate;
    CHECK(verify(inst.arr, cert.alpha, sys).ok);
    CHECK(exp_compatible(cert.alpha, sys));
    switch (inst.classification.k) {
      case 0: CHECK(cert.method == Method::kC0); break;
      case 1: CHECK(cert.method == Method::kC1); break;
      default: CHECK(cert.method == Method::kC2); break;
    }
  }
}
