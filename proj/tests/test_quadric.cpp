// SPDX-License-Identifier: Apache-2.0
#include "octaq/quadric.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace octaq;

namespace {

QuarticCoefficients Qc(Rational A, Rational B, Rational C, Rational D) {
  return QuarticCoefficients::make(A, B, C, D);
}

// f written out monomial by monomial.
Rational direct_eval(const QuarticCoefficients& q, const Vec3Q& p) {
  const Rational &x = p[0], &y = p[1], &z = p[2];
  Rational x2 = x * x, y2 = y * y, z2 = z * z;
  Rational quartic = q.A * (x2 * y2 + y2 * z2 + z2 * x2) +
                     q.B * (x2 * x2 + y2 * y2 + z2 * z2 + 2 * x2 * y2 + 2 * y2 * z2 + 2 * z2 * x2);
  return quartic + q.C * (x2 + y2 + z2) + q.D;
}

Rational rnd(std::mt19937& rng, int lim = 9, int den = 5) {
  return frac(std::uniform_int_distribution<int>(-lim, lim)(rng),
                  std::uniform_int_distribution<int>(1, den)(rng));
}

std::vector<std::size_t> sizes(const std::vector<SingularOrbit>& orbits) {
  std::vector<std::size_t> s;
  for (const auto& o : orbits) s.push_back(o.size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("A = B = 0 is rejected") {
  CHECK_THROWS_AS(QuarticCoefficients::make(0, 0, 1, 1), NotAQuartic);
  CHECK_NOTHROW(QuarticCoefficients::make(0, 1, 0, 0));
}

TEST_CASE("evaluation matches the expanded polynomial") {
  std::mt19937 rng(1);
  for (int t = 0; t < 500; ++t) {
    Rational A = rnd(rng), B = rnd(rng);
    if (A == 0 && B == 0) continue;
    QuarticCoefficients q = Qc(A, B, rnd(rng), rnd(rng));
    Vec3Q p{rnd(rng), rnd(rng), rnd(rng)};
    CHECK(q.eval(p) == direct_eval(q, p));
    CHECK(q.eval(to_double(p)) == doctest::Approx(direct_eval(q, p).get_d()).epsilon(1e-12));
    CHECK(q.negated().eval(p) == -q.eval(p));
  }
}

TEST_CASE("gradient and hessian agree with central differences") {
  QuarticCoefficients q = Qc(frac(3, 2), frac(-2, 3), 1, frac(-1, 4));
  Vec3d p{0.3, -0.7, 1.1};
  const double h = 1e-5;
  Vec3d g = q.gradient(p);
  auto H = q.hessian(p);
  for (int i = 0; i < 3; ++i) {
    Vec3d a = p, b = p;
    a[i] += h;
    b[i] -= h;
    CHECK(g[i] == doctest::Approx((q.eval(a) - q.eval(b)) / (2 * h)).epsilon(1e-7));
    Vec3d ga = q.gradient(a), gb = q.gradient(b);
    for (int j = 0; j < 3; ++j)
      CHECK(H[i][j] == doctest::Approx((ga[j] - gb[j]) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("the quadric form reproduces f and has the closed-form invariants") {
  QuarticCoefficients q = Qc(1, 0, -1, frac(1, 2));
  QuadricMatrix m = assemble_lambda(q);
  CHECK(m.W == frac(1, 2));
  QuadricInvariants inv = invariants(m);
  CHECK(inv.eigs0[0] == frac(-1, 2));
  CHECK(inv.eigs0[2] == 1);
  CHECK(inv.det_lambda == (4 * q.D - 3 * q.C * q.C) / 16);
  CHECK(inv.rk_lambda == 4);
  CHECK(inv.rk_lambda0 == 3);
  CHECK(inv.sigma_minus0 == 2);
  CHECK(inv.sigma_plus0 == 1);
  auto c = center(m);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == frac(1, 2));
}

TEST_CASE("bareiss determinant and rank") {
  std::vector<std::vector<Rational>> m = {{0, 2, 1}, {1, 1, 1}, {2, 4, 3}};
  CHECK(bareiss_determinant(m) == 0);  // row 3 = row 1 + 2 row 2
  CHECK(bareiss_rank(m) == 2);
  std::vector<std::vector<Rational>> p = {{0, 1}, {1, 0}};
  CHECK(bareiss_determinant(p) == -1);
  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("quadric kinds") {
  auto kind = [](Rational A, Rational B, Rational C, Rational D) {
    return bromwich_burington_classify(invariants(assemble_lambda(Qc(A, B, C, D)))).kind;
  };
  CHECK(kind(0, 1, -1, frac(1, 8)) == QuadricKind::real_parallel_planes);
  CHECK(kind(0, 1, 0, 1) == QuadricKind::imaginary_parallel_planes);
  CHECK(kind(0, 1, -1, frac(1, 4)) == QuadricKind::double_plane);
  CHECK(kind(1, frac(-1, 3), 0, 1) == QuadricKind::real_elliptic_cylinder);
  CHECK(kind(1, frac(-1, 3), 0, -1) == QuadricKind::imaginary_elliptic_cylinder);
  CHECK(kind(-1, 1, 0, -1) == QuadricKind::real_ellipsoid);
  CHECK(kind(-1, 1, 0, 1) == QuadricKind::imaginary_ellipsoid);
  CHECK(kind(-1, 1, 0, 0) == QuadricKind::imaginary_elliptic_cone);
  CHECK(kind(1, 0, 0, 0) == QuadricKind::real_elliptic_cone);
  CHECK(to_string(QuadricKind::two_sheeted_hyperboloid) == "two_sheeted_hyperboloid");
}

TEST_CASE("line restrictions agree with evaluation along each stratum") {
  std::mt19937 rng(2);
  for (int t = 0; t < 300; ++t) {
    Rational A = rnd(rng), B = rnd(rng);
    if (A == 0 && B == 0) continue;
    QuarticCoefficients q = Qc(A, B, rnd(rng), rnd(rng));
    Rational s = rnd(rng);
    s = s * s;
    for (Stratum st : kStrata) {
      LineRestriction lr = line_restriction(q, st);
      Vec3Q d = direction(st);
      // the point sqrt(s) * d has squared coordinates s * d_i^2
      Rational u = 0, v = 0;
      Vec3Q X{s * d[0] * d[0], s * d[1] * d[1], s * d[2] * d[2]};
      u = X[0] + X[1] + X[2];
      v = X[0] * X[1] + X[1] * X[2] + X[2] * X[0];
      CHECK(lr.a * s * s + lr.b * s + lr.c == q.eval_uv(u, v));
    }
  }
}

TEST_CASE("positive root counts") {
  CHECK(line_restriction(Qc(1, 0, -1, frac(1, 2)), Stratum::space_diagonal).positive_roots == 2);
  CHECK(line_restriction(Qc(0, 1, 0, -1), Stratum::axis).positive_roots == 1);
  LineRestriction t = line_restriction(Qc(1, 0, -1, frac(3, 4)), Stratum::space_diagonal);
  REQUIRE(t.double_positive_root.has_value());
  CHECK(*t.double_positive_root == frac(1, 2));
  CHECK(line_restriction(Qc(0, 1, -1, 0), Stratum::axis).has_zero_root);
}

TEST_CASE("singular orbits on the strata") {
  CHECK(sizes(strata_singularities(Qc(1, 0, -1, frac(3, 4)))) == std::vector<std::size_t>{8});
  CHECK(sizes(strata_singularities(Qc(1, 0, -1, 1))) == std::vector<std::size_t>{12});
  CHECK(sizes(strata_singularities(Qc(1, 0, -1, 0))) == std::vector<std::size_t>{1});
  CHECK(strata_singularities(Qc(1, 0, -1, frac(1, 2))).empty());
  // f, grad f vanish at the reported points
  for (const auto& o : strata_singularities(Qc(1, 1, -1, frac(1, 5)))) {
    Vec3d p = o.representative();
    QuarticCoefficients q = Qc(1, 1, -1, frac(1, 5));
    CHECK(std::abs(q.eval(p)) < 1e-12);
    Vec3d g = q.gradient(p);
    CHECK(std::abs(g[0]) + std::abs(g[1]) + std::abs(g[2]) < 1e-12);
  }
}

TEST_CASE("existence and sign change") {
  CHECK(existence_check(Qc(1, 1, 1, 1)) == Existence::empty);
  CHECK(existence_check(Qc(1, -3, 0, -1)) == Existence::empty);
  CHECK(existence_check(Qc(1, 1, -1, 0)) != Existence::empty);
  CHECK(existence_check(Qc(-1, 1, 0, 0)) == Existence::point_only);
  CHECK(existence_check(Qc(0, 1, -1, frac(1, 4))) == Existence::nonempty_surface);
  CHECK_FALSE(changes_sign(Qc(0, 1, -1, frac(1, 4))));
  CHECK(changes_sign(Qc(0, 1, -1, frac(1, 8))));
}

TEST_CASE("changes_sign agrees with dense sampling on random quartics") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Rational A = rnd(rng, 4, 2), B = rnd(rng, 4, 2);
    if (A == 0 && B == 0) continue;
    QuarticCoefficients q = Qc(A, B, rnd(rng, 4, 2), rnd(rng, 4, 2));
    bool pos = false, neg = false;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= i; ++j)
        for (int k = 0; k <= j; ++k) {
          double s = 0.1;
          double v = q.eval(Vec3d{i * s, j * s, k * s});
          pos = pos || v > 0;
          neg = neg || v < 0;
        }
    // sampling can only under-report a sign change
    if (pos && neg) CHECK(changes_sign(q));
    ++checked;
  }
  CHECK(checked > 200);
}
