// SPDX-License-Identifier: Apache-2.0
#include "octaq/quadric.hpp"

#include <algorithm>
#include <cmath>

namespace octaq {

QuarticCoefficients QuarticCoefficients::make(Rational A, Rational B, Rational C, Rational D) {
  if (sgn(A) == 0 && sgn(B) == 0) throw NotAQuartic();
  return {std::move(A), std::move(B), std::move(C), std::move(D)};
}

Rational QuarticCoefficients::eval_uv(const Rational& u, const Rational& v) const {
  return A * v + B * u * u + C * u + D;
}

Rational QuarticCoefficients::eval(const Vec3Q& p) const {
  Invariants inv = invariants_uvw(p);
  return eval_uv(inv.u, inv.v);
}

double QuarticCoefficients::eval(const Vec3d& p) const {
  double x2 = p[0] * p[0], y2 = p[1] * p[1], z2 = p[2] * p[2];
  double u = x2 + y2 + z2;
  double v = x2 * y2 + y2 * z2 + z2 * x2;
  return A.get_d() * v + B.get_d() * u * u + C.get_d() * u + D.get_d();
}

Vec3d QuarticCoefficients::gradient(const Vec3d& p) const {
  double a = A.get_d(), b = B.get_d(), c = C.get_d();
  double x2 = p[0] * p[0], y2 = p[1] * p[1], z2 = p[2] * p[2];
  double u = x2 + y2 + z2;
  double sq[3] = {x2, y2, z2};
  Vec3d g{};
  for (int i = 0; i < 3; ++i) g[i] = 2.0 * p[i] * (a * (u - sq[i]) + 2.0 * b * u + c);
  return g;
}

std::array<Vec3d, 3> QuarticCoefficients::hessian(const Vec3d& p) const {
  double a = A.get_d(), b = B.get_d(), c = C.get_d();
  double x2 = p[0] * p[0], y2 = p[1] * p[1], z2 = p[2] * p[2];
  double u = x2 + y2 + z2;
  double sq[3] = {x2, y2, z2};
  std::array<Vec3d, 3> h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h[i][j] = i == j ? 2.0 * (a * (u - sq[i]) + 2.0 * b * u + c) + 8.0 * b * sq[i]
                       : 4.0 * p[i] * p[j] * (a + 2.0 * b);
  return h;
}

QuarticCoefficients QuarticCoefficients::negated() const { return {-A, -B, -C, -D}; }

std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::axis: return "axis";
    case Stratum::face_diagonal: return "face_diagonal";
    case Stratum::space_diagonal: return "space_diagonal";
  }
  return "?";
}

Vec3Q direction(Stratum s) {
  switch (s) {
    case Stratum::axis: return {Rational(1), Rational(0), Rational(0)};
    case Stratum::face_diagonal: return {Rational(1), Rational(1), Rational(0)};
    case Stratum::space_diagonal: return {Rational(1), Rational(1), Rational(1)};
  }
  return {};
}

Mat3Q QuadricMatrix::lambda0() const {
  Mat3Q m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = lambda[i + 1][j + 1];
  return m;
}

Rational QuadricMatrix::form(const Vec3Q& X) const {
  std::array<Rational, 4> v{Rational(1), X[0], X[1], X[2]};
  Rational s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += v[i] * lambda[i][j] * v[j];
  return s;
}

QuadricMatrix assemble_lambda(const QuarticCoefficients& q) {
  QuadricMatrix m;
  m.W = (q.A + 2 * q.B) / 2;
  Rational half_c = q.C / 2;
  m.lambda[0][0] = q.D;
  for (int i = 1; i < 4; ++i) {
    m.lambda[0][i] = half_c;
    m.lambda[i][0] = half_c;
    for (int j = 1; j < 4; ++j) m.lambda[i][j] = i == j ? q.B : m.W;
  }
  return m;
}

namespace {

// Fraction-free elimination; returns rank, and the determinant via *det when square.
int bareiss(std::vector<std::vector<Rational>>& m, Rational* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Rational prev = 1;
  int sign_flip = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      std::swap(m[p], m[r]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (det) {
    if (r == rows && rows == cols)
      *det = sign_flip * m[rows - 1][cols - 1];
    else
      *det = 0;
  }
  return static_cast<int>(r);
}

Rational det3(const Mat3Q& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 1;
  Rational d;
  bareiss(m, &d);
  return d;
}

int bareiss_rank(std::vector<std::vector<Rational>> m) { return bareiss(m, nullptr); }

QuadricInvariants invariants(const QuadricMatrix& m) {
  QuadricInvariants inv;
  const Mat3Q l0 = m.lambda0();
  const Rational& B = l0[0][0];
  const Rational& W = m.W;
  // A = 2W - 2B
  Rational A = 2 * W - 2 * B;

  inv.det_lambda = bareiss_determinant(to_rows(m.lambda));
  inv.det_lambda0 = bareiss_determinant(to_rows(l0));
  inv.rk_lambda = bareiss_rank(to_rows(m.lambda));
  inv.rk_lambda0 = bareiss_rank(to_rows(l0));
  inv.J = 9 * (B * B - W * W);
  inv.eigs0 = {-A / 2, -A / 2, A + 3 * B};
  for (const auto& e : inv.eigs0) {
    inv.sigma_minus0 += sgn(e) < 0;
    inv.sigma_plus0 += sgn(e) > 0;
  }

  inv.K = 0;
  for (int skip = 0; skip < 4; ++skip) {
    Mat3Q minor;
    int r = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == skip) continue;
      int c = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == skip) continue;
        minor[r][c++] = m.lambda[i][j];
      }
      ++r;
    }
    inv.K += det3(minor);
  }
  inv.K2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      inv.K2 += m.lambda[i][i] * m.lambda[j][j] - m.lambda[i][j] * m.lambda[j][i];

  if (inv.rk_lambda < 4) {
    // The kernel leaves the plane at infinity exactly when e0 is not in the row space.
    auto rows = to_rows(m.lambda);
    rows.push_back({Rational(1), Rational(0), Rational(0), Rational(0)});
    inv.singular_point = bareiss_rank(rows) > inv.rk_lambda ? SingularPointKind::proper
                                                             : SingularPointKind::improper;
  }
  return inv;
}

std::optional<Vec3Q> center(const QuadricMatrix& m) {
  Rational denom = m.lambda[1][1] + 2 * m.W;
  if (sgn(denom) == 0) return std::nullopt;
  Rational c = -(2 * m.lambda[0][1]) / (2 * denom);
  return Vec3Q{c, c, c};
}

std::string_view to_string(QuadricKind k) {
  switch (k) {
    case QuadricKind::elliptic_paraboloid: return "elliptic_paraboloid";
    case QuadricKind::hyperbolic_paraboloid: return "hyperbolic_paraboloid";
    case QuadricKind::real_elliptic_cylinder: return "real_elliptic_cylinder";
    case QuadricKind::imaginary_elliptic_cylinder: return "imaginary_elliptic_cylinder";
    case QuadricKind::hyperbolic_cylinder: return "hyperbolic_cylinder";
    case QuadricKind::parabolic_cylinder: return "parabolic_cylinder";
    case QuadricKind::imaginary_lines: return "pair_of_imaginary_lines";
    case QuadricKind::secant_planes: return "pair_of_secant_planes";
    case QuadricKind::real_parallel_planes: return "pair_of_real_parallel_planes";
    case QuadricKind::imaginary_parallel_planes: return "pair_of_imaginary_parallel_planes";
    case QuadricKind::double_plane: return "double_plane";
    case QuadricKind::real_ellipsoid: return "real_ellipsoid";
    case QuadricKind::imaginary_ellipsoid: return "imaginary_ellipsoid";
    case QuadricKind::one_sheeted_hyperboloid: return "one_sheeted_hyperboloid";
    case QuadricKind::two_sheeted_hyperboloid: return "two_sheeted_hyperboloid";
    case QuadricKind::real_elliptic_cone: return "real_elliptic_cone";
    case QuadricKind::imaginary_elliptic_cone: return "imaginary_elliptic_cone";
  }
  return "?";
}

QuadricType bromwich_burington_classify(const QuadricInvariants& inv) {
  const int J = sgn(inv.J);
  QuadricKind kind;
  if (sgn(inv.det_lambda0) == 0) {
    switch (inv.rk_lambda) {
      case 4:
        kind = J > 0 ? QuadricKind::elliptic_paraboloid : QuadricKind::hyperbolic_paraboloid;
        break;
      case 3: {
        if (J > 0) {
          Rational trace = inv.eigs0[0] + inv.eigs0[1] + inv.eigs0[2];
          kind = sgn(inv.K) * sgn(trace) < 0 ? QuadricKind::real_elliptic_cylinder
                                             : QuadricKind::imaginary_elliptic_cylinder;
        } else if (J < 0) {
          kind = QuadricKind::hyperbolic_cylinder;
        } else {
          kind = QuadricKind::parabolic_cylinder;
        }
        break;
      }
      case 2:
        if (J > 0)
          kind = QuadricKind::imaginary_lines;
        else if (J < 0)
          kind = QuadricKind::secant_planes;
        else
          kind = sgn(inv.K2) < 0 ? QuadricKind::real_parallel_planes
                                 : QuadricKind::imaginary_parallel_planes;
        break;
      default:
        kind = QuadricKind::double_plane;
        break;
    }
  } else {
    bool definite = inv.sigma_minus0 == 3 || inv.sigma_plus0 == 3;
    int d = sgn(inv.det_lambda);
    if (d == 0)
      kind = definite ? QuadricKind::imaginary_elliptic_cone : QuadricKind::real_elliptic_cone;
    else if (definite)
      kind = d < 0 ? QuadricKind::real_ellipsoid : QuadricKind::imaginary_ellipsoid;
    else
      kind = d > 0 ? QuadricKind::one_sheeted_hyperboloid : QuadricKind::two_sheeted_hyperboloid;
  }
  return {kind, inv.singular_point};
}

double LineRestriction::largest_positive_root() const {
  if (positive_roots == 0) return 0.0;
  if (double_positive_root) return double_positive_root->get_d();
  double A = a.get_d(), Bq = b.get_d(), Cq = c.get_d();
  if (sgn(a) == 0) return -Cq / Bq;
  double disc = std::sqrt(std::max(0.0, Bq * Bq - 4 * A * Cq));
  double r1 = (-Bq + disc) / (2 * A), r2 = (-Bq - disc) / (2 * A);
  return std::max(r1, r2);
}

LineRestriction line_restriction(const QuarticCoefficients& q, Stratum s) {
  LineRestriction lr;
  lr.stratum = s;
  switch (s) {
    case Stratum::axis:
      lr.a = q.B;
      lr.b = q.C;
      break;
    case Stratum::face_diagonal:
      lr.a = q.A + 4 * q.B;
      lr.b = 2 * q.C;
      break;
    case Stratum::space_diagonal:
      lr.a = 3 * q.A + 9 * q.B;
      lr.b = 3 * q.C;
      break;
  }
  lr.c = q.D;
  const int sa = sgn(lr.a), sb = sgn(lr.b), sc = sgn(lr.c);
  lr.identically_zero = sa == 0 && sb == 0 && sc == 0;
  lr.has_zero_root = sc == 0;
  if (lr.identically_zero) return lr;

  if (sa == 0) {
    if (sb != 0) {
      Rational r = -lr.c / lr.b;
      if (sgn(r) > 0) {
        lr.positive_roots = 1;
        lr.rational_roots.push_back(r);
      }
    }
    return lr;
  }
  Rational disc = lr.b * lr.b - 4 * lr.a * lr.c;
  const int sd = sgn(disc);
  if (sd < 0) return lr;
  if (sd == 0) {
    Rational r = -lr.b / (2 * lr.a);
    if (sgn(r) > 0) {
      lr.positive_roots = 1;
      lr.double_positive_root = r;
      lr.rational_roots.push_back(r);
    }
    return lr;
  }
  // Vieta: product c/a, sum -b/a.
  const int prod = sc * sa, sum = -sb * sa;
  if (sc == 0)
    lr.positive_roots = sum > 0 ? 1 : 0;
  else if (prod < 0)
    lr.positive_roots = 1;
  else
    lr.positive_roots = sum > 0 ? 2 : 0;
  if (lr.positive_roots > 0 && is_square(disc)) {
    Rational sq = exact_sqrt(disc);
    for (const Rational& r : {Rational((-lr.b - sq) / (2 * lr.a)), Rational((-lr.b + sq) / (2 * lr.a))})
      if (sgn(r) > 0) lr.rational_roots.push_back(r);
    std::sort(lr.rational_roots.begin(), lr.rational_roots.end());
  }
  return lr;
}

std::string_view to_string(Locus l) {
  switch (l) {
    case Locus::origin: return "origin";
    case Locus::axis: return "axis";
    case Locus::face_diagonal: return "face_diagonal";
    case Locus::space_diagonal: return "space_diagonal";
  }
  return "?";
}

Vec3d SingularOrbit::representative() const {
  double t = std::sqrt(s.get_d());
  switch (locus) {
    case Locus::origin: return {0, 0, 0};
    case Locus::axis: return {t, 0, 0};
    case Locus::face_diagonal: return {t, t, 0};
    case Locus::space_diagonal: return {t, t, t};
  }
  return {};
}

std::vector<SingularOrbit> strata_singularities(const QuarticCoefficients& q) {
  std::vector<SingularOrbit> out;
  if (sgn(q.D) == 0) out.push_back({Locus::origin, Rational(0), false, 1});
  for (Stratum st : kStrata) {
    LineRestriction lr = line_restriction(q, st);
    Locus locus = st == Stratum::axis            ? Locus::axis
                  : st == Stratum::face_diagonal ? Locus::face_diagonal
                                                 : Locus::space_diagonal;
    std::size_t size = orbit(direction(st)).size();
    if (lr.identically_zero)
      out.push_back({locus, Rational(1), true, size});
    else if (lr.double_positive_root)
      out.push_back({locus, *lr.double_positive_root, false, size});
  }
  return out;
}

std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::empty: return "empty";
    case Existence::point_only: return "point_only";
    case Existence::nonempty_surface: return "nonempty_surface";
  }
  return "?";
}

namespace {

struct Quad {
  Rational a, b, c;  // a u^2 + b u + c on u >= 0
};

// Whether some u in [0, inf) (or (0, inf) when open) has q(u) <= 0 (or < 0 when strict).
bool attains_nonpositive(const Quad& q, bool open, bool strict) {
  auto ok = [&](const Rational& v) { return strict ? sgn(v) < 0 : sgn(v) <= 0; };
  const int sa = sgn(q.a), sb = sgn(q.b);
  if (sa < 0) return true;
  if (sa == 0) {
    if (sb < 0) return true;
    if (sb == 0) return ok(q.c);
    // increasing on u >= 0: value c at u = 0, approached but not attained when open
    return open ? sgn(q.c) < 0 : ok(q.c);
  }
  Rational vertex = -q.b / (2 * q.a);
  if (sgn(vertex) > 0) return ok(q.c - q.b * q.b / (4 * q.a));
  return open ? sgn(q.c) < 0 : ok(q.c);
}

bool straddles(const Quad& axis, const Quad& diag, bool open) {
  Quad na{-axis.a, -axis.b, -axis.c}, nd{-diag.a, -diag.b, -diag.c};
  bool low = attains_nonpositive(axis, open, false) || attains_nonpositive(diag, open, false);
  bool high = attains_nonpositive(na, open, false) || attains_nonpositive(nd, open, false);
  return low && high;
}

std::pair<Quad, Quad> extreme_profiles(const QuarticCoefficients& q) {
  return {Quad{q.B, q.C, q.D}, Quad{q.A / 3 + q.B, q.C, q.D}};
}

}  // namespace

Existence existence_check(const QuarticCoefficients& q) {
  auto [axis, diag] = extreme_profiles(q);
  if (!straddles(axis, diag, false)) return Existence::empty;
  if (sgn(q.D) == 0 && !straddles(axis, diag, true)) return Existence::point_only;
  return Existence::nonempty_surface;
}

bool changes_sign(const QuarticCoefficients& q) {
  auto [axis, diag] = extreme_profiles(q);
  Quad na{-axis.a, -axis.b, -axis.c}, nd{-diag.a, -diag.b, -diag.c};
  bool neg = attains_nonpositive(axis, false, true) || attains_nonpositive(diag, false, true);
  bool pos = attains_nonpositive(na, false, true) || attains_nonpositive(nd, false, true);
  return neg && pos;
}

}  // namespace octaq
