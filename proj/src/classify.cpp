// SPDX-License-Identifier: Apache-2.0
#include "octaq/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace octaq {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::a_zero: return "a0";
    case Family::b_zero: return "b0";
    case Family::c_zero: return "c0";
    case Family::eps: return "eps";
  }
  return "?";
}

std::string_view to_string(BulletStatus s) {
  switch (s) {
    case BulletStatus::tabulated: return "tabulated";
    case BulletStatus::table_conflict: return "table-conflict, oracle-adjudicated";
    case BulletStatus::not_tabulated: return "not-tabulated, oracle-adjudicated";
  }
  return "?";
}

FamilyForm normalize(const QuarticCoefficients& q) {
  if (sgn(q.A) == 0 && sgn(q.B) == 0) throw NotAQuartic();
  FamilyForm f;
  const Rational lead = sgn(q.A) != 0 ? q.A : q.B;
  f.normalized = {q.A / lead, q.B / lead, q.C / lead, q.D / lead};
  const QuarticCoefficients& n = f.normalized;
  f.c_sign = sgn(n.C);
  f.d_sign = sgn(n.D);

  if (sgn(n.A) == 0) {
    f.family = Family::a_zero;
    if (f.c_sign != 0) {
      f.d_over_c2 = n.B * n.D / (n.C * n.C);
      Rational rad = 1 - 4 * *f.d_over_c2;
      if (sgn(rad) >= 0) f.sphere_k = Surd::sqrt_of(rad);
    }
  } else if (sgn(n.B) == 0) {
    f.family = Family::b_zero;
    if (f.c_sign != 0) f.d_over_c2 = n.A * n.D / (n.C * n.C);
  } else if (sgn(n.C) == 0) {
    f.family = Family::c_zero;
    f.b_over_a = n.B / n.A;
  } else {
    f.family = Family::eps;
    f.beta = abs(n.A / n.B);
    f.eps1 = sgn(n.B);
    f.eps2 = sgn(n.C);
    f.k = 4 * n.D * n.B / (n.C * n.C);
  }
  return f;
}

namespace {

using Sizes = std::vector<std::size_t>;
constexpr auto TAB = BulletStatus::tabulated;
constexpr auto CONFLICT = BulletStatus::table_conflict;
constexpr auto EXTRA = BulletStatus::not_tabulated;

Bullet make(std::string id, std::string label, BulletStatus st, int comps, bool unbounded,
            Sizes sizes = {}, std::string claim = {}) {
  std::sort(sizes.begin(), sizes.end());
  return {std::move(id), std::move(label), st, comps, unbounded, std::move(sizes), std::move(claim)};
}

Bullet empty_bullet(std::string id, BulletStatus st = EXTRA, std::string claim = {}) {
  return make(std::move(id), "empty", st, 0, false, {}, std::move(claim));
}

std::string sign_tag(int s) { return s < 0 ? "<0" : s == 0 ? "=0" : ">0"; }

Bullet a_zero(const FamilyForm& f) {
  const std::string base = "a0/C" + sign_tag(f.c_sign);
  if (f.d_sign < 0) return make(base + "/D<0", "sphere", TAB, 1, false);
  if (f.c_sign < 0) {
    if (f.d_sign == 0) return make(base + "/D=0", "sphere_plus_origin", TAB, 2, false, {1});
    const Rational& r = *f.d_over_c2;
    const Rational quarter(1, 4);
    if (r < quarter) return make(base + "/0<D/C^2<1/4", "two_nested_spheres", TAB, 2, false);
    if (r == quarter)
      return make(base + "/D/C^2=1/4", "double_sphere_multiplicity_two", TAB, 1, false, {6, 8, 12});
    return empty_bullet(base + "/D/C^2>1/4");
  }
  if (f.d_sign == 0) return make(base + "/D=0", "origin_point", TAB, 1, false, {1});
  return empty_bullet(base + "/D>0");
}

Bullet b_zero(const FamilyForm& f) {
  const std::string base = "b0/C" + sign_tag(f.c_sign);
  if (f.c_sign == 0) {
    if (f.d_sign < 0) return make(base + "/D<0", "concave_stellated_six_branches", TAB, 1, true);
    if (f.d_sign == 0) return make(base + "/D=0", "coordinate_axes", TAB, 1, true, {1, 6});
    return empty_bullet(base + "/D>0");
  }
  const Rational& r = *f.d_over_c2;
  if (f.c_sign < 0) {
    const Rational t34(3, 4);
    if (f.d_sign < 0) return make(base + "/D<0", "stellated_octahedron_unbounded", TAB, 1, true);
    if (f.d_sign == 0)
      return make(base + "/D=0", "stellated_octahedron_plus_origin", TAB, 2, true, {1});
    if (r < t34)
      return make(base + "/0<D/C^2<3/4", "cuboid_inside_stellated_octahedron", TAB, 2, true);
    if (r == t34)
      return make(base + "/D/C^2=3/4", "eight_conic_points_cube_vertices", TAB, 1, true, {8});
    if (r < 1)
      return make(base + "/3/4<D/C^2<1", "stellated_surface_with_internal_cube", TAB, 1, true);
    if (r == 1)
      return make(base + "/D/C^2=1", "twelve_conic_points_octahedron_edges", TAB, 1, true, {12});
    return make(base + "/D/C^2>1", "six_half_cylinders", TAB, 6, true);
  }
  if (f.d_sign < 0) return make(base + "/D<0", "deformed_octahedron", TAB, 1, false);
  if (f.d_sign == 0) return make(base + "/D=0", "origin_point", TAB, 1, false, {1});
  if (r < frac(4, 3))
    return empty_bullet(base + "/0<D/C^2<4/3", CONFLICT,
                        "two concentric components, one compact and one unbounded");
  return empty_bullet(base + "/D/C^2>=4/3");
}

Bullet c_zero(const FamilyForm& f) {
  const Rational& b = *f.b_over_a;
  const Rational third(-1, 3), quarter(-1, 4);
  const std::string dtag = "/D" + sign_tag(f.d_sign);
  if (b < third) {
    const std::string base = "c0/B/A<-1/3" + dtag;
    if (f.d_sign > 0) return make(base, "cuboid", TAB, 1, false);
    if (f.d_sign == 0) return make(base, "origin_point", TAB, 1, false, {1});
    return empty_bullet(base);
  }
  if (b == third) {
    const std::string base = "c0/B/A=-1/3" + dtag;
    if (f.d_sign > 0) return make(base, "stellated_cube", TAB, 1, true);
    if (f.d_sign == 0)
      return make(base, "four_diagonal_lines", CONFLICT, 1, true, {1, 8},
                  "degenerates to the point {0}");
    return empty_bullet(base);
  }
  if (sgn(b) < 0) {
    const std::string base = "c0/-1/3<B/A<0" + dtag;
    if (f.d_sign < 0) {
      if (b <= quarter) return make(base + "/B/A<=-1/4", "eight_hyperbolic_sheets", TAB, 8, true);
      return make(base + "/B/A>-1/4", "connected_six_branch_surface", CONFLICT, 1, true, {},
                  "eight hyperbolic sheets");
    }
    if (f.d_sign > 0) {
      if (b >= quarter) return make(base + "/B/A>=-1/4", "six_smooth_cones", TAB, 6, true);
      return make(base + "/B/A<-1/4", "connected_eight_branch_surface", CONFLICT, 1, true, {},
                  "six smooth cones");
    }
    Sizes sizes{1};
    if (b == quarter) sizes.push_back(12);
    return make(base, "octahedral_cone_through_origin", CONFLICT, 1, true, sizes,
                "degenerates to the point {0}");
  }
  const std::string base = "c0/B/A>0" + dtag;
  if (f.d_sign < 0) return make(base, "topological_sphere", TAB, 1, false);
  if (f.d_sign == 0) return make(base, "origin_point", EXTRA, 1, false, {1});
  return empty_bullet(base);
}

std::string eps_base(const FamilyForm& f) {
  std::string s = "eps(";
  s += *f.eps1 > 0 ? "+" : "-";
  s += ",";
  s += *f.eps2 > 0 ? "+" : "-";
  s += ")";
  return s;
}

Bullet eps_pp(const FamilyForm& f) {
  const std::string base = eps_base(f);
  const int sk = sgn(*f.k);
  if (sk < 0) return make(base + "/k<0", "topological_sphere", TAB, 1, false);
  if (sk == 0) return make(base + "/k=0", "origin_point", TAB, 1, false, {1});
  return empty_bullet(base + "/k>0");
}

Bullet eps_pm(const FamilyForm& f) {
  const std::string base = eps_base(f);
  const Rational& k = *f.k;
  const Rational& beta = *f.beta;
  const Rational t3 = 3 / (3 + beta), t4 = 4 / (4 + beta);
  const int sk = sgn(k);
  if (sk < 0) return make(base + "/k<0", "smooth_octahedron", TAB, 1, false);
  if (sk == 0) return make(base + "/k=0", "octahedron_plus_origin", TAB, 2, false, {1});
  if (k < t3)
    return make(base + "/0<k<3/(3+beta)", "octahedron_plus_spherical_cube", TAB, 2, false);
  if (k == t3)
    return make(base + "/k=3/(3+beta)", "eight_conic_points_internal_cube", TAB, 1, false, {8});
  if (k < t4)
    return make(base + "/3/(3+beta)<k<4/(4+beta)", "double_surface_eight_holes", TAB, 1, false);
  if (k == t4)
    return make(base + "/k=4/(4+beta)", "kummer_like_12_conic_points", TAB, 1, false, {12});
  if (k < 1) return make(base + "/4/(4+beta)<k<1", "six_compact_components", TAB, 6, false);
  if (k == 1) return make(base + "/k=1", "six_isolated_points", EXTRA, 6, false, {6});
  return empty_bullet(base + "/k>1");
}

Bullet eps_mm(const FamilyForm& f) {
  const std::string base = eps_base(f);
  const Rational& k = *f.k;
  const Rational& beta = *f.beta;
  const int sk = sgn(k);
  if (beta <= 3) {
    const bool three = beta == 3;
    const std::string b = base + (three ? "/beta=3" : "/beta<3");
    if (sk < 0)
      return three ? make(b + "/k<0", "eight_branched_star", TAB, 1, false)
                   : make(b + "/k<0", "cuboid", TAB, 1, false);
    if (sk == 0) return make(b + "/k=0", "origin_point", TAB, 1, false, {1});
    if (three || k < 3 / (3 - beta))
      return empty_bullet(three ? b + "/k>0" : b + "/0<k<3/(3-beta)", CONFLICT,
                          "a cuboid, for every k below 3/(3-beta)");
    return empty_bullet(b + "/k>=3/(3-beta)");
  }
  const Rational t3 = 3 / (3 - beta);
  if (beta <= 4) {
    const bool four = beta == 4;
    const std::string b = base + (four ? "/beta=4" : "/3<beta<4");
    const BulletStatus side = four ? EXTRA : TAB;
    if (k < t3)
      return make(b + "/k<3/(3-beta)", "stellated_cube_hyperbolic_sheets", side, 1, true);
    if (k == t3)
      return make(b + "/k=3/(3-beta)", "cayley_like_eight_conical_points", TAB, 1, true, {8});
    if (sk < 0) return make(b + "/3/(3-beta)<k<0", "eight_sheets_plus_cube", side, 9, true);
    if (sk == 0) return make(b + "/k=0", "eight_sheets_plus_origin", TAB, 9, true, {1});
    return make(b + "/k>0", "eight_hyperbolic_sheets", side, 8, true);
  }
  const Rational t4 = 4 / (4 - beta);
  const std::string b = base + "/beta>4";
  if (k < t4) return make(b + "/k<4/(4-beta)", "six_disjoint_components", TAB, 6, true);
  if (k == t4)
    return make(b + "/k=4/(4-beta)", "twelve_conic_points_unbounded", CONFLICT, 1, true, {12},
                "compact, with twelve singularities");
  if (k < t3)
    return make(b + "/4/(4-beta)<k<3/(3-beta)", "connected_unbounded_surface", CONFLICT, 1, true,
                {}, "compact");
  if (k == t3)
    return make(b + "/k=3/(3-beta)", "eight_conic_points_unbounded", CONFLICT, 1, true, {8},
                "compact, with eight singular points");
  if (sk < 0) return make(b + "/3/(3-beta)<k<0", "two_concentric_components", TAB, 2, true);
  if (sk == 0) return make(b + "/k=0", "component_plus_origin", TAB, 2, true, {1});
  return make(b + "/k>0", "one_component_centered", TAB, 1, true);
}

Bullet eps_mp(const FamilyForm& f) {
  const std::string base = eps_base(f);
  const Rational& k = *f.k;
  const Rational& beta = *f.beta;
  const int sk = sgn(k);
  if (beta < 3) {
    const std::string b = base + "/beta<3";
    const Rational t3 = 3 / (3 - beta), t4 = 4 / (4 - beta);
    if (sk < 0) return make(b + "/k<0", "compact_stellated_cube", TAB, 1, false);
    if (sk == 0) return make(b + "/k=0", "cube_plus_origin", TAB, 2, false, {1});
    if (k < 1) return make(b + "/0<k<1", "two_nested_components", TAB, 2, false);
    if (k == 1)
      return make(b + "/k=1", "octahedron_in_cuboid_six_conic_points", TAB, 1, false, {6});
    if (k < t4) return make(b + "/1<k<4/(4-beta)", "double_cuboid_six_holes", TAB, 1, false);
    if (k == t4)
      return make(b + "/k=4/(4-beta)", "twelve_conic_points_cuboid_edges", TAB, 1, false, {12});
    if (k < t3)
      return make(b + "/4/(4-beta)<k<3/(3-beta)", "eight_compact_components", TAB, 8, false);
    if (k == t3)
      return make(b + "/k=3/(3-beta)", "eight_isolated_points", EXTRA, 8, false, {8});
    return empty_bullet(b + "/k>3/(3-beta)");
  }
  if (beta == 3) {
    const std::string b = base + "/beta=3";
    if (sk < 0) return make(b + "/k<0", "stellated_cube_eight_half_cylinders", TAB, 1, true);
    if (sk == 0) return make(b + "/k=0", "stellated_cube_plus_origin", TAB, 2, true, {1});
    if (k < 1) return make(b + "/0<k<1", "octahedron_inside_stellated_cube", TAB, 2, true);
    if (k == 1)
      return make(b + "/k=1", "octahedron_in_stellated_cube_six_conic_points", TAB, 1, true, {6});
    if (k < 4) return make(b + "/1<k<4", "octahedron_connected_stellated_cube", TAB, 1, true);
    if (k == 4)
      return make(b + "/k=4", "kummer_twelve_conic_points_half_cylinders", TAB, 1, true, {12});
    return make(b + "/k>4", "eight_hyperbolic_sheets", EXTRA, 8, true);
  }
  if (beta < 4) {
    const std::string b = base + "/3<beta<4";
    const Rational t4 = 4 / (4 - beta);
    if (sk < 0) return make(b + "/k<0", "cube_stellated_by_cones", TAB, 1, true);
    if (sk == 0) return make(b + "/k=0", "cone_stellated_cube_plus_origin", TAB, 2, true, {1});
    if (k < 1) return make(b + "/0<k<1", "octahedron_inside_cone_stellated_cube", TAB, 2, true);
    if (k == 1)
      return make(b + "/k=1", "octahedron_in_cone_stellated_cube_six_conic_points", TAB, 1, true,
                  {6});
    if (k < t4) return make(b + "/1<k<4/(4-beta)", "multiconnected_six_holes", TAB, 1, true);
    if (k == t4) return make(b + "/k=4/(4-beta)", "kummer_twelve_conic_points", TAB, 1, true, {12});
    return make(b + "/k>4/(4-beta)", "eight_hyperbolic_sheets", TAB, 8, true);
  }
  const std::string b = base + "/beta>=4";
  if (sk < 0) return make(b + "/k<0", "six_hyperbolic_sheets", TAB, 6, true);
  if (sk == 0) return make(b + "/k=0", "six_sheets_plus_origin", TAB, 7, true, {1});
  if (k < 1) return make(b + "/0<k<1", "six_sheets_plus_octahedron", TAB, 7, true);
  if (k == 1)
    return make(b + "/k=1", "six_sheets_octahedron_six_conic_points", TAB, 1, true, {6});
  return make(b + "/k>1", "octahedron_connected_six_sheets", TAB, 1, true);
}

std::vector<NestedRadical> sphere_radii(const QuarticCoefficients& q) {
  std::vector<NestedRadical> out;
  if (sgn(q.A) != 0) return out;
  Rational B = q.B, C = q.C, D = q.D;
  if (sgn(B) < 0) {
    B = -B;
    C = -C;
    D = -D;
  }
  Rational disc = C * C - 4 * B * D;
  if (sgn(disc) < 0) return out;
  Rational base = -C / (2 * B), coeff = 1 / (2 * B);
  if (sgn(disc) == 0) {
    if (sgn(base) > 0) out.push_back({base, 0, 0});
    return out;
  }
  // smaller root (-C - sqrt(disc)) / 2B is positive iff C < 0 and D > 0
  if (sgn(C) < 0 && sgn(D) > 0) out.push_back({base, -coeff, disc});
  // larger root is positive iff C < 0 or D < 0
  if (sgn(C) < 0 || sgn(D) < 0) out.push_back({base, coeff, disc});
  return out;
}

std::string sizes_str(const Sizes& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

}  // namespace

Bullet select_bullet(const FamilyForm& form) {
  switch (form.family) {
    case Family::a_zero: return a_zero(form);
    case Family::b_zero: return b_zero(form);
    case Family::c_zero: return c_zero(form);
    case Family::eps:
      if (*form.eps1 > 0) return *form.eps2 > 0 ? eps_pp(form) : eps_pm(form);
      return *form.eps2 > 0 ? eps_mp(form) : eps_mm(form);
  }
  throw std::logic_error("unmatched case");
}

const std::vector<std::string>& case_labels() {
  static const std::vector<std::string> labels = {
      "empty",
      "origin_point",
      "degenerate_not_covered",
      "sphere",
      "sphere_plus_origin",
      "two_nested_spheres",
      "double_sphere_multiplicity_two",
      "stellated_octahedron_unbounded",
      "stellated_octahedron_plus_origin",
      "cuboid_inside_stellated_octahedron",
      "eight_conic_points_cube_vertices",
      "stellated_surface_with_internal_cube",
      "twelve_conic_points_octahedron_edges",
      "six_half_cylinders",
      "concave_stellated_six_branches",
      "coordinate_axes",
      "deformed_octahedron",
      "cuboid",
      "stellated_cube",
      "four_diagonal_lines",
      "eight_hyperbolic_sheets",
      "connected_six_branch_surface",
      "six_smooth_cones",
      "connected_eight_branch_surface",
      "octahedral_cone_through_origin",
      "topological_sphere",
      "smooth_octahedron",
      "octahedron_plus_origin",
      "octahedron_plus_spherical_cube",
      "eight_conic_points_internal_cube",
      "double_surface_eight_holes",
      "kummer_like_12_conic_points",
      "six_compact_components",
      "six_isolated_points",
      "eight_branched_star",
      "stellated_cube_hyperbolic_sheets",
      "cayley_like_eight_conical_points",
      "eight_sheets_plus_cube",
      "eight_sheets_plus_origin",
      "six_disjoint_components",
      "twelve_conic_points_unbounded",
      "connected_unbounded_surface",
      "eight_conic_points_unbounded",
      "two_concentric_components",
      "component_plus_origin",
      "one_component_centered",
      "compact_stellated_cube",
      "cube_plus_origin",
      "two_nested_components",
      "octahedron_in_cuboid_six_conic_points",
      "double_cuboid_six_holes",
      "twelve_conic_points_cuboid_edges",
      "eight_compact_components",
      "eight_isolated_points",
      "stellated_cube_eight_half_cylinders",
      "stellated_cube_plus_origin",
      "octahedron_inside_stellated_cube",
      "octahedron_in_stellated_cube_six_conic_points",
      "octahedron_connected_stellated_cube",
      "kummer_twelve_conic_points_half_cylinders",
      "cube_stellated_by_cones",
      "cone_stellated_cube_plus_origin",
      "octahedron_inside_cone_stellated_cube",
      "octahedron_in_cone_stellated_cube_six_conic_points",
      "multiconnected_six_holes",
      "kummer_twelve_conic_points",
      "six_hyperbolic_sheets",
      "six_sheets_plus_origin",
      "six_sheets_plus_octahedron",
      "six_sheets_octahedron_six_conic_points",
      "octahedron_connected_six_sheets",
  };
  return labels;
}

TopologyReport classify(const QuarticCoefficients& q) {
  TopologyReport r;
  r.coefficients = q;
  r.family = normalize(q);
  r.bullet = select_bullet(r.family);
  r.case_label = r.bullet.label;

  ProfileFacts facts = radial_profile(q);
  r.components = facts.components;
  r.unbounded = facts.unbounded;
  r.nesting_depth = facts.nesting_depth;
  r.sign_change = facts.sign_change;
  r.existence = existence_check(q);
  r.quadric = bromwich_burington_classify(invariants(assemble_lambda(q)));
  r.radii = sphere_radii(q);

  Sizes strata_sizes;
  for (const SingularOrbit& o : strata_singularities(q)) {
    r.singular_orbits.push_back({o.locus, Surd::sqrt_of(o.s), o.size, o.whole_line});
    strata_sizes.push_back(o.size);
  }
  std::sort(strata_sizes.begin(), strata_sizes.end());

  auto& c = r.conflicts;
  if (std::find(case_labels().begin(), case_labels().end(), r.case_label) == case_labels().end())
    c.push_back("label outside the shipped taxonomy: " + r.case_label);
  if (r.bullet.components != facts.components)
    c.push_back("case table expects " + std::to_string(r.bullet.components) +
                " components, radial profile gives " + std::to_string(facts.components));
  if (r.bullet.unbounded != facts.unbounded)
    c.push_back(std::string("case table expects ") + (r.bullet.unbounded ? "unbounded" : "bounded") +
                ", radial profile disagrees");
  if (r.bullet.singular_sizes != facts.singular_sizes)
    c.push_back("case table expects singular orbits " + sizes_str(r.bullet.singular_sizes) +
                ", radial profile gives " + sizes_str(facts.singular_sizes));
  if (strata_sizes != facts.singular_sizes)
    c.push_back("strata singularities " + sizes_str(strata_sizes) + " differ from radial profile " +
                sizes_str(facts.singular_sizes));
  const bool origin_only = sgn(q.D) == 0 && facts.components == 1 && !facts.unbounded;
  const Existence expected = facts.components == 0 ? Existence::empty
                             : origin_only          ? Existence::point_only
                                                    : Existence::nonempty_surface;
  if (r.existence != expected)
    c.push_back("existence check says " + std::string(to_string(r.existence)) +
                ", radial profile implies " + std::string(to_string(expected)));
  if (changes_sign(q) != facts.sign_change)
    c.push_back("sign-change test disagrees with radial profile");
  if (r.nesting_depth > r.components) c.push_back("nesting depth exceeds component count");
  return r;
}

std::vector<Rational> Range::nodes() const {
  if (sgn(step) <= 0) throw std::invalid_argument("range step must be positive");
  if ((hi - lo) / step > kMaxRangeNodes) throw std::invalid_argument("range has too many nodes");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

Range parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("range must be LO:HI:STEP");
  Range r{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (sgn(r.step) <= 0) throw std::invalid_argument("range step must be positive");
  if (r.hi < r.lo) throw std::invalid_argument("range is empty");
  return r;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  const std::vector<Rational> nodes = spec.range.nodes();
  std::vector<SweepRow> rows(nodes.size());
  const long n = static_cast<long>(nodes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const Rational& p = nodes[i];
    SweepRow& row = rows[i];
    row.parameter = p;
    switch (spec.family) {
      case Family::eps: {
        Rational b = spec.eps1 / spec.beta;
        row.coefficients = {Rational(1), b, spec.eps2 / spec.beta, p * spec.eps1 / (4 * spec.beta)};
        break;
      }
      case Family::a_zero: row.coefficients = {Rational(0), Rational(1), spec.c, p}; break;
      case Family::b_zero: row.coefficients = {Rational(1), Rational(0), spec.c, p}; break;
      case Family::c_zero: row.coefficients = {Rational(1), spec.b, Rational(0), p}; break;
    }
    try {
      const QuarticCoefficients& q = row.coefficients;
      row.result = classify(QuarticCoefficients::make(q.A, q.B, q.C, q.D));
    } catch (const std::exception& e) {
      row.result = std::string(e.what());
    }
  }
  return rows;
}

}  // namespace octaq
