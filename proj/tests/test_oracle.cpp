// SPDX-License-Identifier: Apache-2.0
#include "octaq/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace octaq;

namespace {

QuarticCoefficients Qc(Rational A, Rational B, Rational C, Rational D) {
  return QuarticCoefficients::make(A, B, C, D);
}

ComponentLabels components_of(const QuarticCoefficients& q, int n) {
  return count_components(evaluate_grid(q, choose_box(q), n));
}

}  // namespace

TEST_CASE("grid corner values are exact and agree with rational evaluation") {
  QuarticCoefficients q = Qc(frac(3, 7), frac(-1, 3), frac(5, 2), frac(-1, 9));
  Rational L = 2;
  const int n = 16;
  SignGrid g = evaluate_grid(q, L, n);
  for (int i = 0; i <= n; i += 3)
    for (int j = 0; j <= n; j += 5)
      for (int k = 0; k <= n; k += 2) {
        Vec3Q p{L * (2 * i - n) / n, L * (2 * j - n) / n, L * (2 * k - n) / n};
        Rational v = q.eval(p);
        CHECK(g.signs[g.index(i, j, k)] == sgn(v));
        CHECK(g.values[g.index(i, j, k)] == doctest::Approx(v.get_d()).epsilon(1e-12));
      }
}

TEST_CASE("the sampled field is symmetric under the 48 lattice maps") {
  QuarticCoefficients q = Qc(1, frac(-2, 5), -1, frac(1, 7));
  const int n = 12;
  SignGrid g = evaluate_grid(q, choose_box(q), n);
  const long h = n / 2;
  for (const auto& e : octahedral_group())
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
          auto m = e.apply(std::array<long, 3>{i - h, j - h, k - h});
          std::size_t a = g.index(i, j, k), b = g.index(int(m[0] + h), int(m[1] + h), int(m[2] + h));
          CHECK(g.values[a] == g.values[b]);
          CHECK(g.signs[a] == g.signs[b]);
        }
}

TEST_CASE("parallel and serial kernels give identical results") {
  for (QuarticCoefficients q : {Qc(1, 0, -1, frac(1, 2)), Qc(1, 1, -1, frac(39, 200)),
                                Qc(1, frac(-3, 10), 0, -1), Qc(3, -1, 1, frac(-1, 8))}) {
    Rational L = choose_box(q);
    SignGrid a = evaluate_grid(q, L, 48), b = evaluate_grid_serial(q, L, 48);
    CHECK(a.values == b.values);
    CHECK(a.signs == b.signs);
    ComponentLabels ca = count_components(a), cb = count_components_serial(a);
    CHECK(ca.labels == cb.labels);
    CHECK(ca.count() == cb.count());
    CHECK(ca.boundary_touching == cb.boundary_touching);
  }
}

TEST_CASE("component counts") {
  ComponentLabels two = components_of(Qc(0, 1, -1, frac(1, 8)), 64);
  CHECK(two.count() == 2);
  CHECK(two.boundary_touching == 0);
  ComponentLabels six = components_of(Qc(1, 0, -1, 2), 64);
  CHECK(six.count() == 6);
  CHECK(six.boundary_touching == 6);
  CHECK(components_of(Qc(1, 1, 1, 1), 32).count() == 0);
  ComponentLabels eight = components_of(Qc(1, frac(-3, 10), 0, -1), 64);
  CHECK(eight.count() == 8);
}

TEST_CASE("ray crossings") {
  QuarticCoefficients q = Qc(1, 0, -1, frac(1, 2));
  CHECK(ray_root_count(q, Stratum::space_diagonal, choose_box(q)) == 2);
  QuarticCoefficients s = Qc(0, 1, 0, -1);
  CHECK(ray_root_count(s, Stratum::axis, choose_box(s)) == 1);
  QuarticCoefficients t = Qc(1, 0, -1, frac(3, 4));
  CHECK(ray_root_count(t, Stratum::space_diagonal, choose_box(t)) == 0);
}

TEST_CASE("singular points refine to tiny residuals") {
  QuarticCoefficients q = Qc(1, 0, -1, frac(3, 4));
  auto c = refine_singularities(q, strata_singularities(q));
  REQUIRE(c.size() == 1);
  CHECK(c[0].orbit_size == 8);
  CHECK(c[0].accepted);
  CHECK(c[0].f_residual < 1e-12);
  CHECK(c[0].point[0] == doctest::Approx(std::sqrt(0.5)));

  QuarticCoefficients o = Qc(1, 0, -1, 0);
  auto co = refine_singularities(o, strata_singularities(o));
  REQUIRE(co.size() == 1);
  CHECK(co[0].f_residual == 0);
  CHECK(co[0].grad_residual == 0);

  QuarticCoefficients k = Qc(1, 0, -1, 1);
  auto ck = refine_singularities(k, strata_singularities(k));
  REQUIRE(ck.size() == 1);
  CHECK(ck[0].orbit_size == 12);
  CHECK(ck[0].accepted);
}

TEST_CASE("nesting along the axis") {
  auto nest = [](const QuarticCoefficients& q) {
    SignGrid g = evaluate_grid(q, choose_box(q), 64);
    return nesting_depth(g, count_components(g)).components_pierced;
  };
  CHECK(nest(Qc(0, 1, -1, frac(1, 8))) == 2);
  CHECK(nest(Qc(0, 1, 0, -1)) == 1);
  CHECK(nest(Qc(1, 1, -1, frac(1, 8))) == 2);
}

TEST_CASE("verify against the classifier") {
  QuarticCoefficients q = Qc(1, 0, -1, frac(3, 4));
  OracleReport r = verify(q, classify(q), 64);
  CHECK(r.agreement == Agreement::agree);
  CHECK(r.singular_candidates.size() == 1);
  CHECK(r.stable);

  QuarticCoefficients e = Qc(1, -3, 0, -1);
  OracleReport re = verify(e, classify(e), 64);
  CHECK(re.agreement == Agreement::agree);
  CHECK(re.component_count == 0);

  QuarticCoefficients h = Qc(1, 0, -1, frac(1, 2));
  TopologyReport corrupt = classify(h);
  corrupt.nesting_depth += 1;
  corrupt.components += 1;
  corrupt.unbounded = false;
  CHECK(verify(h, corrupt, 64).agreement == Agreement::disagree);
}

TEST_CASE("the doubled sphere is caught by the degenerate-locus mode") {
  QuarticCoefficients q = Qc(0, 1, -1, frac(1, 4));
  OracleReport r = verify(q, classify(q), 64);
  CHECK(r.degenerate_locus_detected);
  CHECK(r.agreement == Agreement::agree);
}

TEST_CASE("verify is independent of thread scheduling") {
  QuarticCoefficients q = Qc(3, -1, 1, frac(-1, 8));
  OracleReport a = verify(q, classify(q), 32), b = verify(q, classify(q), 32);
  CHECK(a.component_count == b.component_count);
  CHECK(a.mismatches == b.mismatches);
  CHECK(a.min_abs_value == b.min_abs_value);
}
