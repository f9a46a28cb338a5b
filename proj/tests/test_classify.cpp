// SPDX-License-Identifier: Apache-2.0
#include "octaq/classify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace octaq;

namespace {

TopologyReport run(Rational A, Rational B, Rational C, Rational D) {
  return classify(QuarticCoefficients::make(A, B, C, D));
}

}  // namespace

TEST_CASE("normalization into the four families") {
  FamilyForm a = normalize(QuarticCoefficients::make(0, 2, -2, frac(1, 4)));
  CHECK(a.family == Family::a_zero);
  CHECK(*a.d_over_c2 == frac(1, 8));
  CHECK(a.sphere_k->value() == doctest::Approx(std::sqrt(0.5)));

  FamilyForm b = normalize(QuarticCoefficients::make(2, 0, -2, 1));
  CHECK(b.family == Family::b_zero);
  CHECK(*b.d_over_c2 == frac(1, 2));

  FamilyForm c = normalize(QuarticCoefficients::make(-3, 1, 0, 1));
  CHECK(c.family == Family::c_zero);
  CHECK(*c.b_over_a == frac(-1, 3));

  FamilyForm e = normalize(QuarticCoefficients::make(3, -1, 1, frac(-1, 4)));
  CHECK(e.family == Family::eps);
  CHECK(*e.beta == 3);
  CHECK(*e.eps1 == -1);
  CHECK(*e.eps2 == 1);
  CHECK(*e.k == 1);
}

TEST_CASE("labels on the round-sphere family") {
  CHECK(run(0, 1, -1, -1).case_label == "sphere");
  CHECK(run(0, 1, -1, frac(1, 8)).case_label == "two_nested_spheres");
  TopologyReport dbl = run(0, 1, -1, frac(1, 4));
  CHECK(dbl.case_label == "double_sphere_multiplicity_two");
  REQUIRE(dbl.radii.size() == 1);
  CHECK(dbl.radii[0].value() == doctest::Approx(std::sqrt(0.5)));
  TopologyReport two = run(0, 1, -1, frac(1, 8));
  REQUIRE(two.radii.size() == 2);
  CHECK(two.radii[0].value() * two.radii[0].value() + two.radii[1].value() * two.radii[1].value() ==
        doctest::Approx(1.0));
}

TEST_CASE("empty cases and the origin") {
  TopologyReport e = run(1, -3, 0, -1);
  CHECK(e.case_label == "empty");
  CHECK(e.components == 0);
  CHECK(e.existence == Existence::empty);
  CHECK(run(1, 1, 1, 1).components == 0);
  TopologyReport o = run(1, 1, 0, 0);
  CHECK(o.case_label == "origin_point");
  CHECK(o.components == 1);
}

TEST_CASE("case table rows that disagree with the surface are flagged") {
  TopologyReport b0 = run(1, 0, 1, frac(1, 2));
  CHECK(b0.components == 0);
  CHECK(b0.bullet.status == BulletStatus::table_conflict);
  CHECK_FALSE(b0.bullet.table_claim.empty());
  TopologyReport mm = run(1, -1, -1, frac(-1, 4));  // (-,-), beta = 1, k = 1
  CHECK(mm.components == 0);
  CHECK(mm.bullet.status == BulletStatus::table_conflict);
}

TEST_CASE("every report is free of internal conflicts on a dense eps grid") {
  std::set<std::string> seen;
  for (int e1 : {-1, 1})
    for (int e2 : {-1, 1})
      for (Rational beta : {frac(1, 2), Rational(1), Rational(3), frac(7, 2), Rational(4), Rational(6)}) {
        SweepSpec spec;
        spec.family = Family::eps;
        spec.eps1 = e1;
        spec.eps2 = e2;
        spec.beta = beta;
        spec.range = parse_range("-8:8:1/16");
        for (const SweepRow& row : sweep(spec)) {
          REQUIRE(std::holds_alternative<TopologyReport>(row.result));
          const auto& r = std::get<TopologyReport>(row.result);
          CHECK(r.conflicts.empty());
          seen.insert(r.case_label);
        }
      }
  CHECK(seen.size() > 20);
  for (const auto& l : seen)
    CHECK(std::find(case_labels().begin(), case_labels().end(), l) != case_labels().end());
}

TEST_CASE("case labels are unique") {
  std::set<std::string> s(case_labels().begin(), case_labels().end());
  CHECK(s.size() == case_labels().size());
}

TEST_CASE("ranges") {
  Range r = parse_range("0:1:1/4");
  CHECK(r.nodes().size() == 5);
  CHECK(r.nodes().back() == 1);
  CHECK(parse_range("-1:0.5:0.5").nodes().size() == 4);
  CHECK_THROWS(parse_range("0:1"));
  CHECK_THROWS(parse_range("1:0:1"));
  CHECK_THROWS(parse_range("0:1:0"));
  CHECK_THROWS(parse_range("0:1:1/10000000").nodes());
}

TEST_CASE("sweep reports an error row instead of throwing") {
  SweepSpec spec;
  spec.family = Family::c_zero;
  spec.b = 0;  // A = 1, B = 0, C = 0 is still a quartic
  spec.range = parse_range("-1:1:1");
  auto rows = sweep(spec);
  CHECK(rows.size() == 3);
  for (const auto& row : rows) CHECK(std::holds_alternative<TopologyReport>(row.result));
}
