// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/octgroup.hpp"
#include "octaq/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace octaq {

class NotAQuartic : public std::invalid_argument {
 public:
  NotAQuartic() : std::invalid_argument("not a quartic: A and B are both zero") {}
};

// f = A v + B u^2 + C u + D
struct QuarticCoefficients {
  Rational A, B, C, D;

  static QuarticCoefficients make(Rational A, Rational B, Rational C, Rational D);

  Rational eval(const Vec3Q& p) const;
  Rational eval_uv(const Rational& u, const Rational& v) const;
  double eval(const Vec3d& p) const;
  Vec3d gradient(const Vec3d& p) const;
  std::array<Vec3d, 3> hessian(const Vec3d& p) const;
  QuarticCoefficients negated() const;
};

enum class Stratum { axis, face_diagonal, space_diagonal };
inline constexpr std::array<Stratum, 3> kStrata{Stratum::axis, Stratum::face_diagonal,
                                                Stratum::space_diagonal};

std::string_view to_string(Stratum s);
// (1,0,0), (1,1,0), (1,1,1)
Vec3Q direction(Stratum s);

template <std::size_t N>
using MatQ = std::array<std::array<Rational, N>, N>;
using Mat4Q = MatQ<4>;
using Mat3Q = MatQ<3>;

struct QuadricMatrix {
  Mat4Q lambda;
  Rational W;

  Mat3Q lambda0() const;
  // (1,X,Y,Z) lambda (1,X,Y,Z)^T
  Rational form(const Vec3Q& X) const;
};

QuadricMatrix assemble_lambda(const QuarticCoefficients& q);

Rational bareiss_determinant(std::vector<std::vector<Rational>> m);
int bareiss_rank(std::vector<std::vector<Rational>> m);

template <std::size_t N>
std::vector<std::vector<Rational>> to_rows(const MatQ<N>& m) {
  std::vector<std::vector<Rational>> r(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = m[i][j];
  return r;
}

enum class SingularPointKind { none, proper, improper };

struct QuadricInvariants {
  Rational det_lambda, det_lambda0;
  int rk_lambda = 0, rk_lambda0 = 0;
  Rational J;
  Rational K;   // sum of principal 3x3 minors of lambda
  Rational K2;  // sum of principal 2x2 minors of lambda
  std::array<Rational, 3> eigs0;
  int sigma_minus0 = 0, sigma_plus0 = 0;
  SingularPointKind singular_point = SingularPointKind::none;
};

QuadricInvariants invariants(const QuadricMatrix& m);

std::optional<Vec3Q> center(const QuadricMatrix& m);

enum class QuadricKind {
  elliptic_paraboloid,
  hyperbolic_paraboloid,
  real_elliptic_cylinder,
  imaginary_elliptic_cylinder,
  hyperbolic_cylinder,
  parabolic_cylinder,
  imaginary_lines,
  secant_planes,
  real_parallel_planes,
  imaginary_parallel_planes,
  double_plane,
  real_ellipsoid,
  imaginary_ellipsoid,
  one_sheeted_hyperboloid,
  two_sheeted_hyperboloid,
  real_elliptic_cone,
  imaginary_elliptic_cone,
};

std::string_view to_string(QuadricKind k);

struct QuadricType {
  QuadricKind kind;
  SingularPointKind singular_point;
};

QuadricType bromwich_burington_classify(const QuadricInvariants& inv);

// a s^2 + b s + c along t * direction, s = t^2
struct LineRestriction {
  Stratum stratum;
  Rational a, b, c;
  int positive_roots = 0;
  std::optional<Rational> double_positive_root;
  bool has_zero_root = false;
  bool identically_zero = false;
  std::vector<Rational> rational_roots;  // positive roots when rational

  double largest_positive_root() const;  // 0 when there is none
};

LineRestriction line_restriction(const QuarticCoefficients& q, Stratum s);

enum class Locus { origin, axis, face_diagonal, space_diagonal };
std::string_view to_string(Locus l);

struct SingularOrbit {
  Locus locus;
  Rational s;               // representative is sqrt(s) * direction
  bool whole_line = false;  // every point of the stratum is singular
  std::size_t size = 1;

  Vec3d representative() const;
};

std::vector<SingularOrbit> strata_singularities(const QuarticCoefficients& q);

enum class Existence { empty, point_only, nonempty_surface };
std::string_view to_string(Existence e);

Existence existence_check(const QuarticCoefficients& q);
// True when f takes both strictly positive and strictly negative values.
bool changes_sign(const QuarticCoefficients& q);

}  // namespace octaq
