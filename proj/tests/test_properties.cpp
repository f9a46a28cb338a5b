// SPDX-License-Identifier: Apache-2.0
#include "octaq/classify.hpp"
#include "octaq/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace octaq;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  Rational q(int lim = 6, int den = 4) {
    Rational r(std::uniform_int_distribution<int>(-lim, lim)(rng),
               std::uniform_int_distribution<int>(1, den)(rng));
    r.canonicalize();
    return r;
  }
  QuarticCoefficients quartic() {
    Rational A = q(), B = q(), C = q(), D = q();
    if (A == 0 && B == 0) B = 1;
    return QuarticCoefficients::make(A, B, C, D);
  }
};

std::vector<std::size_t> sizes(const TopologyReport& r) {
  std::vector<std::size_t> s;
  for (const auto& o : r.singular_orbits) s.push_back(o.size);
  return s;
}

}  // namespace

TEST_CASE("classification is total and scale invariant") {
  Gen g(11);
  for (int t = 0; t < 10000; ++t) {
    QuarticCoefficients q = g.quartic();
    TopologyReport r = classify(q);
    CHECK(r.conflicts.empty());
    CHECK(std::find(case_labels().begin(), case_labels().end(), r.case_label) != case_labels().end());
    Rational s = g.q(5, 5);
    if (s == 0) s = -1;
    TopologyReport r2 = classify(QuarticCoefficients::make(s * q.A, s * q.B, s * q.C, s * q.D));
    CHECK(r2.case_label == r.case_label);
    CHECK(r2.components == r.components);
    CHECK(r2.unbounded == r.unbounded);
    CHECK(r2.nesting_depth == r.nesting_depth);
    CHECK(sizes(r2) == sizes(r));
    CHECK(r2.bullet.id == r.bullet.id);
  }
}

TEST_CASE("reports are consistent with existence and sign change") {
  Gen g(12);
  for (int t = 0; t < 10000; ++t) {
    QuarticCoefficients q = g.quartic();
    TopologyReport r = classify(q);
    if (r.existence == Existence::empty) {
      CHECK(r.components == 0);
      CHECK(r.singular_orbits.empty());
    } else {
      CHECK(r.components >= 1);
    }
    if (r.existence == Existence::point_only) CHECK(r.case_label == "origin_point");
    CHECK(r.sign_change == changes_sign(q));
    if (!r.unbounded) CHECK(r.nesting_depth <= r.components);
  }
}

TEST_CASE("f is invariant under the group at random rational points") {
  Gen g(13);
  const auto& G = octahedral_group();
  for (int t = 0; t < 10000; ++t) {
    QuarticCoefficients q = g.quartic();
    Vec3Q p{g.q(9, 7), g.q(9, 7), g.q(9, 7)};
    Rational f = q.eval(p);
    const auto& e = G[static_cast<std::size_t>(t) % G.size()];
    CHECK(q.eval(e.apply(p)) == f);
  }
}

TEST_CASE("the grid oracle never contradicts the classifier on random quartics") {
  Gen g(14);
  int agree = 0, inconclusive = 0;
  for (int t = 0; t < 150; ++t) {
    QuarticCoefficients q = g.quartic();
    TopologyReport r = classify(q);
    OracleReport o = verify(q, r, 32);
    INFO("A=" << to_string(q.A) << " B=" << to_string(q.B) << " C=" << to_string(q.C)
              << " D=" << to_string(q.D) << " label=" << r.case_label
              << " mismatch=" << (o.mismatches.empty() ? std::string() : o.mismatches.front()));
    CHECK(o.agreement != Agreement::disagree);
    agree += o.agreement == Agreement::agree;
    inconclusive += o.agreement == Agreement::inconclusive;
  }
  MESSAGE("agree " << agree << ", inconclusive " << inconclusive);
  CHECK(agree > 100);
}
