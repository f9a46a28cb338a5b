// SPDX-License-Identifier: Apache-2.0
#include "octaq/report_json.hpp"

#include <sstream>

namespace octaq {

namespace {

void put_rational(Json& j, const std::string& key, const Rational& q) {
  j[key] = to_string(q);
  j[key + "_approx"] = q.get_d();
}

Json coefficients_json(const QuarticCoefficients& q) {
  Json j;
  put_rational(j, "A", q.A);
  put_rational(j, "B", q.B);
  put_rational(j, "C", q.C);
  put_rational(j, "D", q.D);
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const TopologyReport& r) {
  Json j;
  j["coefficients"] = coefficients_json(r.coefficients);
  j["case_label"] = r.case_label;
  j["components"] = r.components;
  j["unbounded"] = r.unbounded;
  j["nesting_depth"] = r.nesting_depth;
  j["sign_change"] = r.sign_change;
  j["existence"] = std::string(to_string(r.existence));

  Json orbits = Json::array();
  for (const auto& o : r.singular_orbits) {
    Json e;
    Vec3Q dir = o.locus == Locus::origin ? Vec3Q{0, 0, 0}
                : o.locus == Locus::axis ? direction(Stratum::axis)
                : o.locus == Locus::face_diagonal ? direction(Stratum::face_diagonal)
                                                  : direction(Stratum::space_diagonal);
    Json rep = Json::array(), rep_approx = Json::array();
    for (const auto& c : dir) {
      rep.push_back(sgn(c) == 0 ? std::string("0") : o.coordinate.str());
      rep_approx.push_back(sgn(c) == 0 ? 0.0 : o.coordinate.value());
    }
    e["rep"] = rep;
    e["rep_approx"] = rep_approx;
    e["size"] = o.size;
    e["stratum"] = std::string(to_string(o.locus));
    e["whole_line"] = o.whole_line;
    orbits.push_back(e);
  }
  j["singular_orbits"] = orbits;

  Json radii = Json::array();
  for (const auto& rad : r.radii) radii.push_back({{"value", rad.str()}, {"approx", rad.value()}});
  j["radii"] = radii;

  const FamilyForm& f = r.family;
  Json fam;
  fam["family"] = std::string(to_string(f.family));
  fam["normalized"] = coefficients_json(f.normalized);
  if (f.beta) put_rational(fam, "beta", *f.beta);
  if (f.eps1) fam["eps1"] = *f.eps1;
  if (f.eps2) fam["eps2"] = *f.eps2;
  if (f.k) put_rational(fam, "k", *f.k);
  if (f.d_over_c2) put_rational(fam, "d_over_c2", *f.d_over_c2);
  if (f.b_over_a) put_rational(fam, "b_over_a", *f.b_over_a);
  if (f.sphere_k) {
    fam["sphere_k"] = f.sphere_k->str();
    fam["sphere_k_approx"] = f.sphere_k->value();
  }
  j["family"] = fam;

  Json prov;
  prov["case"] = r.bullet.id;
  prov["status"] = std::string(to_string(r.bullet.status));
  if (!r.bullet.table_claim.empty()) prov["table_claim"] = r.bullet.table_claim;
  j["provenance"] = prov;

  j["quadric"] = {{"kind", std::string(to_string(r.quadric.kind))},
                  {"singular_point", r.quadric.singular_point == SingularPointKind::none     ? "none"
                                     : r.quadric.singular_point == SingularPointKind::proper ? "proper"
                                                                                              : "improper"}};
  j["conflicts"] = r.conflicts;
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["resolution"] = r.resolution;
  put_rational(j, "half_width", r.half_width);
  j["stable"] = r.stable;
  j["component_count"] = r.component_count;
  j["boundary_touching"] = r.boundary_touching;
  Json rays, roots, tangent;
  for (std::size_t s = 0; s < kStrata.size(); ++s) {
    const std::string key(to_string(kStrata[s]));
    rays[key] = r.ray_root_counts[s];
    roots[key] = r.symbolic_roots[s];
    tangent[key] = r.tangent[s];
  }
  j["ray_root_counts"] = rays;
  j["positive_roots"] = roots;
  j["tangent"] = tangent;
  Json cands = Json::array();
  for (const auto& c : r.singular_candidates) {
    Json e;
    e["stratum"] = std::string(to_string(c.locus));
    e["orbit_size"] = c.orbit_size;
    e["whole_line"] = c.whole_line;
    e["point"] = {c.point[0], c.point[1], c.point[2]};
    e["f_residual"] = c.f_residual;
    e["grad_residual"] = c.grad_residual;
    e["iterations"] = c.iterations;
    e["converged"] = c.converged;
    e["accepted"] = c.accepted;
    cands.push_back(e);
  }
  j["singular_candidates"] = cands;
  j["degenerate_locus_detected"] = r.degenerate_locus_detected;
  j["min_abs_value"] = r.min_abs_value;
  j["nesting_depth"] = r.nesting_depth;
  j["axis_sign_changes"] = r.axis_sign_changes;
  j["off_strata_suspects"] = r.suspects;
  j["agreement"] = std::string(to_string(r.agreement));
  j["mismatches"] = r.mismatches;
  return j;
}

Json to_json(const std::vector<GroupElement>& group) {
  Json j;
  j["order"] = group.size();
  Json elems = Json::array();
  for (const auto& g : group) {
    Json m = Json::array();
    for (const auto& row : g.m) m.push_back({row[0], row[1], row[2]});
    elems.push_back({{"matrix", m}, {"det", g.determinant()}});
  }
  j["elements"] = elems;
  return j;
}

std::string sweep_csv_header() {
  return "family,eps1,eps2,beta,c,b,parameter,A,B,C,D,case_label,components,unbounded,nesting,"
         "sing_1,sing_6,sing_8,sing_12,bullet,status,error";
}

std::string sweep_csv_row(const SweepRow& row, const SweepSpec& spec) {
  std::ostringstream os;
  const bool eps = spec.family == Family::eps;
  os << to_string(spec.family) << ',';
  os << (eps ? std::to_string(spec.eps1) : "") << ',';
  os << (eps ? std::to_string(spec.eps2) : "") << ',';
  os << (eps ? to_string(spec.beta) : "") << ',';
  os << (spec.family == Family::a_zero || spec.family == Family::b_zero ? to_string(spec.c) : "") << ',';
  os << (spec.family == Family::c_zero ? to_string(spec.b) : "") << ',';
  os << to_string(row.parameter) << ',';
  const QuarticCoefficients& q = row.coefficients;
  os << to_string(q.A) << ',' << to_string(q.B) << ',' << to_string(q.C) << ',' << to_string(q.D) << ',';
  if (const auto* r = std::get_if<TopologyReport>(&row.result)) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto& o : r->singular_orbits) {
      switch (o.size) {
        case 1: ++counts[0]; break;
        case 6: ++counts[1]; break;
        case 8: ++counts[2]; break;
        case 12: ++counts[3]; break;
        default: break;
      }
    }
    os << r->case_label << ',' << r->components << ',' << (r->unbounded ? "true" : "false") << ','
       << r->nesting_depth << ',' << counts[0] << ',' << counts[1] << ',' << counts[2] << ','
       << counts[3] << ',' << csv_quote(r->bullet.id) << ','
       << csv_quote(std::string(to_string(r->bullet.status))) << ",";
  } else {
    os << "error,,,,,,,,,," << csv_quote(std::get<std::string>(row.result));
  }
  return os.str();
}

}  // namespace octaq
