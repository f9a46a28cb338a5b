// SPDX-License-Identifier: Apache-2.0
#include "octaq/profile.hpp"

#include <algorithm>

namespace octaq {

namespace {

std::size_t level_orbit(Band b) {
  switch (b) {
    case Band::axis_level: return 6;
    case Band::face_level: return 12;
    case Band::diagonal_level: return 8;
    default: return 0;
  }
}

bool is_level(Band b) { return static_cast<int>(b) % 2 == 1; }

bool on_surface(Band b) { return b != Band::above && b != Band::below; }

// Bands swept by a monotone leg from `from` to `to`; the start is excluded when
// it is a level reached only in the limit.
void sweep_leg(Band from, bool open_start, Band to, std::vector<Band>& out) {
  int a = static_cast<int>(from), b = static_cast<int>(to);
  int step = b >= a ? 1 : -1;
  if (open_start && is_level(from)) a += step;
  if ((b - a) * step < 0) return;
  for (int r = a;; r += step) {
    out.push_back(static_cast<Band>(r));
    if (r == b) break;
  }
}

ProfileFacts spheres(const QuarticCoefficients& q) {
  ProfileFacts f;
  Rational B = q.B, C = q.C, D = q.D;
  if (sgn(B) < 0) {
    B = -B;
    C = -C;
    D = -D;
  }
  if (sgn(D) == 0) f.singular_sizes.push_back(1);
  Rational disc = C * C - 4 * B * D;
  int roots = 0, simple = 0;
  if (sgn(disc) > 0) {
    // product D/B, sum -C/B
    if (sgn(D) < 0)
      roots = simple = 1;
    else if (sgn(D) == 0)
      roots = simple = sgn(C) < 0 ? 1 : 0;
    else
      roots = simple = sgn(C) < 0 ? 2 : 0;
  } else if (sgn(disc) == 0 && sgn(C) < 0) {
    roots = 1;
    f.singular_sizes.insert(f.singular_sizes.end(), {6, 12, 8});
  }
  f.components = roots + (sgn(D) == 0 ? 1 : 0);
  f.nesting_depth = simple;
  f.sign_change = simple > 0;
  std::sort(f.singular_sizes.begin(), f.singular_sizes.end());
  return f;
}

}  // namespace

Band band_of(const Rational& p) {
  static const Rational quarter(-1, 4), third(-1, 3);
  if (sgn(p) > 0) return Band::above;
  if (sgn(p) == 0) return Band::axis_level;
  if (p > quarter) return Band::axis_band;
  if (p == quarter) return Band::face_level;
  if (p > third) return Band::diagonal_band;
  if (p == third) return Band::diagonal_level;
  return Band::below;
}

ProfileFacts radial_profile(const QuarticCoefficients& q) {
  if (sgn(q.A) == 0) return spheres(q);

  ProfileFacts f;
  Rational b = q.B / q.A, c = q.C / q.A, d = q.D / q.A;
  const int sd = sgn(d), sc = sgn(c);
  if (sd == 0) f.singular_sizes.push_back(1);

  if (sc == 0 && sd == 0) {
    // homogeneous: a cone over a fixed spherical curve, or the origin alone
    Band r = band_of(b);
    f.bands = {r};
    f.components = 1;
    f.unbounded = on_surface(r);
    if (is_level(r)) f.singular_sizes.push_back(level_orbit(r));
    f.sign_change = r == Band::axis_band || r == Band::face_level || r == Band::diagonal_band;
    std::sort(f.singular_sizes.begin(), f.singular_sizes.end());
    return f;
  }

  std::vector<Band> seq;
  const Band start = band_of(b);
  const bool has_vertex = sd != 0 && sgn(-c / d) > 0;
  if (has_vertex) {
    Rational pv = b - c * c / (4 * d);
    Band vb = band_of(pv);
    if (is_level(vb)) f.singular_sizes.push_back(level_orbit(vb));
    Band tail = sd > 0 ? Band::above : Band::below;
    sweep_leg(start, true, vb, seq);
    std::vector<Band> rest;
    sweep_leg(vb, true, tail, rest);
    seq.insert(seq.end(), rest.begin(), rest.end());
  } else {
    bool falls = sd != 0 ? sd < 0 : sc < 0;
    sweep_leg(start, true, falls ? Band::below : Band::above, seq);
  }
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  f.bands = seq;

  struct Run {
    std::size_t first;
    bool has_face = false, axis_only = true, crossing = false;
  };
  std::vector<Run> runs;
  bool in_run = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Band r = seq[i];
    if (!on_surface(r)) {
      in_run = false;
      continue;
    }
    if (!in_run) {
      runs.push_back({i});
      in_run = true;
    }
    Run& run = runs.back();
    run.has_face = run.has_face || r == Band::face_level;
    run.axis_only = run.axis_only && (r == Band::axis_level || r == Band::axis_band);
    if (r == Band::axis_level && i > 0 && i + 1 < seq.size()) {
      Band lo = std::min(seq[i - 1], seq[i + 1]), hi = std::max(seq[i - 1], seq[i + 1]);
      if (lo == Band::above && hi == Band::axis_band) run.crossing = true;
    }
  }
  for (const Run& run : runs) {
    f.components += run.has_face ? 1 : run.axis_only ? 6 : 8;
    f.unbounded = f.unbounded || run.first == 0;
    f.nesting_depth += run.crossing ? 1 : 0;
  }
  if (sd == 0) f.components += 1;

  bool positive = sd > 0, negative = sd < 0;
  for (Band r : seq) {
    positive = positive || static_cast<int>(r) <= static_cast<int>(Band::diagonal_band);
    negative = negative || static_cast<int>(r) >= static_cast<int>(Band::axis_band);
  }
  f.sign_change = positive && negative;
  std::sort(f.singular_sizes.begin(), f.singular_sizes.end());
  return f;
}

}  // namespace octaq
