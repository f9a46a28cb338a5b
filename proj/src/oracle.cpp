// SPDX-License-Identifier: Apache-2.0
#include "octaq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace octaq {

double SignGrid::coord(int i) const { return half_width.get_d() * (2.0 * i - n) / n; }

double SignGrid::spacing() const { return 2.0 * half_width.get_d() / n; }

double SignGrid::min_abs_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : values) m = std::min(m, std::abs(v));
  return m;
}

bool SignGrid::has_strict_sign_change() const {
  bool neg = false, pos = false;
  for (auto s : signs) {
    neg = neg || s < 0;
    pos = pos || s > 0;
  }
  return neg && pos;
}

Rational choose_box(const QuarticCoefficients& q) {
  double smax = 0;
  for (Stratum s : kStrata) smax = std::max(smax, line_restriction(q, s).largest_positive_root());
  double L = std::max(1.0, 1.5 * std::sqrt(smax));
  return frac(static_cast<long>(std::ceil(L * 16.0)), 16);
}

namespace {

using i128 = __int128;

// n^4 f scaled to integers: f = (a V + b U^2 + c U + d) / den with U, V in lattice units.
struct IntegerForm {
  mpz_class a, b, c, d, den;
  bool fits = false;
  std::int64_t a64 = 0, b64 = 0, c64 = 0, d64 = 0;
  double den_d = 1;
};

IntegerForm integer_form(const QuarticCoefficients& q, const Rational& L, int n) {
  Rational h = L / n;
  Rational t = h * h;
  Rational qa = q.A * t * t, qb = q.B * t * t, qc = q.C * t, qd = q.D;
  IntegerForm f;
  f.den = 1;
  for (const Rational* r : {&qa, &qb, &qc, &qd}) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), r->get_den_mpz_t());
  auto scale = [&](const Rational& r) {
    mpz_class v = r.get_num() * (f.den / r.get_den());
    return v;
  };
  f.a = scale(qa);
  f.b = scale(qb);
  f.c = scale(qc);
  f.d = scale(qd);
  f.fits = f.a.fits_slong_p() && f.b.fits_slong_p() && f.c.fits_slong_p() && f.d.fits_slong_p();
  if (f.fits) {
    f.a64 = f.a.get_si();
    f.b64 = f.b.get_si();
    f.c64 = f.c.get_si();
    f.d64 = f.d.get_si();
  }
  f.den_d = f.den.get_d();
  return f;
}

double i128_to_double(i128 v) { return static_cast<double>(v); }

// Fills one i-slab [i0, i1) of corners.
void fill_slab(const IntegerForm& F, int n, int i0, int i1, SignGrid& g) {
  const int side = n + 1;
  if (F.fits) {
    for (int i = i0; i < i1; ++i) {
      const std::int64_t x = 2 * i - n, x2 = x * x;
      for (int j = 0; j < side; ++j) {
        const std::int64_t y = 2 * j - n, y2 = y * y;
        for (int k = 0; k < side; ++k) {
          const std::int64_t z = 2 * k - n, z2 = z * z;
          const std::int64_t U = x2 + y2 + z2;
          const std::int64_t V = x2 * y2 + y2 * z2 + z2 * x2;
          const i128 val = static_cast<i128>(F.a64) * V + static_cast<i128>(F.b64) * U * U +
                           static_cast<i128>(F.c64) * U + F.d64;
          const std::size_t idx = g.index(i, j, k);
          g.signs[idx] = val > 0 ? 1 : (val < 0 ? -1 : 0);
          g.values[idx] = i128_to_double(val) / F.den_d;
        }
      }
    }
    return;
  }
  mpz_class U, V, val, tmp;
  for (int i = i0; i < i1; ++i) {
    const long x = 2L * i - n, x2 = x * x;
    for (int j = 0; j < side; ++j) {
      const long y = 2L * j - n, y2 = y * y;
      for (int k = 0; k < side; ++k) {
        const long z = 2L * k - n, z2 = z * z;
        U = x2 + y2 + z2;
        V = x2 * y2 + y2 * z2 + z2 * x2;
        val = F.a * V;
        tmp = F.b * U;
        val += tmp * U;
        val += F.c * U;
        val += F.d;
        const std::size_t idx = g.index(i, j, k);
        g.signs[idx] = static_cast<std::int8_t>(sgn(val));
        g.values[idx] = Rational(val, F.den).get_d();
      }
    }
  }
}

SignGrid make_grid(const Rational& L, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("grid resolution must be even and >= 2");
  if (sgn(L) <= 0) throw std::invalid_argument("box half-width must be positive");
  SignGrid g;
  g.half_width = L;
  g.n = n;
  const std::size_t total = g.side() * g.side() * g.side();
  g.values.assign(total, 0.0);
  g.signs.assign(total, 0);
  return g;
}

}  // namespace

SignGrid evaluate_grid_serial(const QuarticCoefficients& q, const Rational& L, int n) {
  SignGrid g = make_grid(L, n);
  fill_slab(integer_form(q, L, n), n, 0, n + 1, g);
  return g;
}

SignGrid evaluate_grid(const QuarticCoefficients& q, const Rational& L, int n) {
  SignGrid g = make_grid(L, n);
  const IntegerForm F = integer_form(q, L, n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= n; ++i) fill_slab(F, n, i, i + 1, g);
  return g;
}

int ComponentInfo::max_extent() const {
  int m = 0;
  for (int a = 0; a < 3; ++a) m = std::max(m, hi[a] - lo[a] + 1);
  return m;
}

namespace {

// Neighbours earlier in scan order, so each 26-adjacency is visited once.
constexpr std::array<std::array<int, 3>, 13> kBackward = {{
    {-1, -1, -1}, {-1, -1, 0}, {-1, -1, 1}, {-1, 0, -1}, {-1, 0, 0}, {-1, 0, 1}, {-1, 1, -1},
    {-1, 1, 0}, {-1, 1, 1}, {0, -1, -1}, {0, -1, 0}, {0, -1, 1}, {0, 0, -1},
}};

std::int32_t find_root(std::vector<std::int32_t>& parent, std::int32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::int32_t>& parent, std::int32_t a, std::int32_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  if (a < b)
    parent[b] = a;
  else
    parent[a] = b;
}

struct CellMask {
  std::vector<std::uint8_t> zero;       // zero-cell flag
  std::vector<std::uint8_t> exact_zero; // some corner is exactly zero
};

void mask_slab(const SignGrid& g, int i0, int i1, CellMask& m) {
  const int n = g.n;
  for (int i = i0; i < i1; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int pos = 0, neg = 0;
        for (int c = 0; c < 8; ++c) {
          const auto s = g.signs[g.index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1))];
          pos += s > 0;
          neg += s < 0;
        }
        const std::size_t cell = (static_cast<std::size_t>(i) * n + j) * n + k;
        m.zero[cell] = !(pos == 8 || neg == 8);
        m.exact_zero[cell] = pos + neg < 8;
      }
}

void link_slab(const CellMask& m, int n, int i0, int i1, std::vector<std::int32_t>& parent) {
  for (int i = i0; i < i1; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::int32_t c = static_cast<std::int32_t>((static_cast<std::size_t>(i) * n + j) * n + k);
        if (!m.zero[c]) continue;
        for (const auto& d : kBackward) {
          const int a = i + d[0], b = j + d[1], e = k + d[2];
          if (a < i0 || b < 0 || b >= n || e < 0 || e >= n) continue;
          const std::int32_t o = static_cast<std::int32_t>((static_cast<std::size_t>(a) * n + b) * n + e);
          if (m.zero[o]) unite(parent, c, o);
        }
      }
}

ComponentLabels finish_labels(const CellMask& m, int n, std::vector<std::int32_t>& parent) {
  ComponentLabels out;
  out.n = n;
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;
  out.labels.assign(cells, -1);
  std::vector<std::int32_t> id_of_root(cells, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::int32_t c = static_cast<std::int32_t>((static_cast<std::size_t>(i) * n + j) * n + k);
        if (!m.zero[c]) continue;
        const std::int32_t r = find_root(parent, c);
        if (id_of_root[r] < 0) {
          id_of_root[r] = static_cast<std::int32_t>(out.components.size());
          ComponentInfo info;
          info.lo = {i, j, k};
          info.hi = {i, j, k};
          out.components.push_back(info);
        }
        const std::int32_t id = id_of_root[r];
        out.labels[c] = id;
        ComponentInfo& info = out.components[id];
        ++info.cells;
        const int p[3] = {i, j, k};
        for (int a = 0; a < 3; ++a) {
          info.lo[a] = std::min(info.lo[a], p[a]);
          info.hi[a] = std::max(info.hi[a], p[a]);
        }
        info.touches_boundary = info.touches_boundary || i == 0 || j == 0 || k == 0 ||
                                i == n - 1 || j == n - 1 || k == n - 1;
        info.has_zero_corner = info.has_zero_corner || m.exact_zero[c];
      }
  for (const auto& info : out.components) {
    out.boundary_touching += info.touches_boundary;
    if (info.max_extent() <= 2 && !info.has_zero_corner) out.inconclusive = true;
  }
  return out;
}

CellMask allocate_mask(int n) {
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;
  return {std::vector<std::uint8_t>(cells, 0), std::vector<std::uint8_t>(cells, 0)};
}

std::vector<std::int32_t> identity_parent(std::size_t cells) {
  std::vector<std::int32_t> parent(cells);
  for (std::size_t c = 0; c < cells; ++c) parent[c] = static_cast<std::int32_t>(c);
  return parent;
}

}  // namespace

ComponentLabels count_components_serial(const SignGrid& grid) {
  const int n = grid.n;
  CellMask m = allocate_mask(n);
  mask_slab(grid, 0, n, m);
  auto parent = identity_parent(m.zero.size());
  link_slab(m, n, 0, n, parent);
  return finish_labels(m, n, parent);
}

ComponentLabels count_components(const SignGrid& grid) {
  const int n = grid.n;
  CellMask m = allocate_mask(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) mask_slab(grid, i, i + 1, m);

  auto parent = identity_parent(m.zero.size());
  int slabs = 1;
#ifdef _OPENMP
  slabs = std::max(1, std::min(n, omp_get_max_threads()));
#endif
  std::vector<int> start(slabs + 1);
  for (int s = 0; s <= slabs; ++s) start[s] = static_cast<int>(static_cast<long>(n) * s / slabs);

  // Each slab only touches its own cells.
#pragma omp parallel for schedule(static)
  for (int s = 0; s < slabs; ++s) link_slab(m, n, start[s], start[s + 1], parent);

  // Stitch the seams.
  for (int s = 1; s < slabs; ++s) {
    const int i = start[s];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::int32_t c = static_cast<std::int32_t>((static_cast<std::size_t>(i) * n + j) * n + k);
        if (!m.zero[c]) continue;
        for (int dj = -1; dj <= 1; ++dj)
          for (int dk = -1; dk <= 1; ++dk) {
            const int b = j + dj, e = k + dk;
            if (b < 0 || b >= n || e < 0 || e >= n) continue;
            const std::int32_t o =
                static_cast<std::int32_t>((static_cast<std::size_t>(i - 1) * n + b) * n + e);
            if (m.zero[o]) unite(parent, c, o);
          }
      }
  }
  return finish_labels(m, n, parent);
}

int ray_root_count(const QuarticCoefficients& q, Stratum s, const Rational& L, int samples) {
  const Vec3d dir = to_double(direction(s));
  const long double Lf = L.get_d();
  const long double a = q.A.get_d(), b = q.B.get_d(), c = q.C.get_d(), d = q.D.get_d();
  int changes = 0, last = 0;
  for (int j = 1; j <= samples; ++j) {
    const long double t = Lf * j / samples;
    long double x2 = t * t * dir[0] * dir[0], y2 = t * t * dir[1] * dir[1], z2 = t * t * dir[2] * dir[2];
    long double u = x2 + y2 + z2, v = x2 * y2 + y2 * z2 + z2 * x2;
    long double f = a * v + b * u * u + c * u + d;
    int sg = f > 0 ? 1 : (f < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

namespace {

double norm(const Vec3d& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

void orbit_residuals(const QuarticCoefficients& q, const Vec3d& p, SingularCandidate& c) {
  c.f_residual = 0;
  c.grad_residual = 0;
  for (const auto& g : octahedral_group()) {
    Vec3d image = g.apply(p);
    c.f_residual = std::max(c.f_residual, std::abs(q.eval(image)));
    c.grad_residual = std::max(c.grad_residual, norm(q.gradient(image)));
  }
}

}  // namespace

std::vector<SingularCandidate> refine_singularities(const QuarticCoefficients& q,
                                                    const std::vector<SingularOrbit>& candidates) {
  std::vector<SingularCandidate> out;
  const double tol = 1e-9 * std::max(1.0, std::abs(q.D.get_d()));
  for (const SingularOrbit& o : candidates) {
    SingularCandidate c;
    c.locus = o.locus;
    c.orbit_size = o.size;
    c.whole_line = o.whole_line;
    if (o.locus == Locus::origin) {
      c.point = {0, 0, 0};
      c.converged = true;
      orbit_residuals(q, c.point, c);
    } else if (o.whole_line) {
      const Vec3d dir = o.representative();
      c.converged = true;
      for (double t : {0.5, 1.0, 2.0}) {
        SingularCandidate probe;
        orbit_residuals(q, {t * dir[0], t * dir[1], t * dir[2]}, probe);
        c.f_residual = std::max(c.f_residual, probe.f_residual);
        c.grad_residual = std::max(c.grad_residual, probe.grad_residual);
      }
      c.point = dir;
    } else {
      const Vec3d unit = o.representative();
      const double t0 = std::sqrt(o.s.get_d());
      const Vec3d dir{unit[0] / t0, unit[1] / t0, unit[2] / t0};
      double t = t0;
      for (c.iterations = 0; c.iterations < 50; ++c.iterations) {
        const Vec3d p{t * dir[0], t * dir[1], t * dir[2]};
        const Vec3d g = q.gradient(p);
        const auto H = q.hessian(p);
        double d1 = 0, d2 = 0;
        for (int i = 0; i < 3; ++i) {
          d1 += g[i] * dir[i];
          for (int j = 0; j < 3; ++j) d2 += dir[i] * H[i][j] * dir[j];
        }
        if (d1 == 0.0) {
          c.converged = true;
          break;
        }
        if (d2 == 0.0) break;
        const double step = d1 / d2;
        t -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) {
          c.converged = true;
          ++c.iterations;
          break;
        }
      }
      c.point = {t * dir[0], t * dir[1], t * dir[2]};
      orbit_residuals(q, c.point, c);
    }
    c.accepted = c.converged && c.f_residual < tol && c.grad_residual < tol;
    out.push_back(c);
  }
  return out;
}

AxisNesting nesting_depth(const SignGrid& grid, const ComponentLabels& labels) {
  AxisNesting out;
  const int n = grid.n, mid = n / 2;
  std::set<std::int32_t> pierced;
  int last = 0;
  for (int i = mid; i <= n; ++i) {
    const int s = grid.signs[grid.index(i, mid, mid)];
    if (s == 0) continue;
    if (last != 0 && s != last) {
      ++out.sign_changes;
      const std::int32_t lab = labels.labels[labels.cell(i - 1, mid, mid)];
      if (lab >= 0) pierced.insert(lab);
    }
    last = s;
  }
  out.components_pierced = static_cast<int>(pierced.size());
  return out;
}

int off_strata_suspects(const QuarticCoefficients& q, const SignGrid& grid) {
  const double h = grid.spacing();
  const double L = grid.half_width.get_d();
  const double a = std::abs(q.A.get_d()), b = std::abs(q.B.get_d()), c = std::abs(q.C.get_d());
  const double fscale = 12.0 * (a + b) * L * L + 2.0 * c;
  const double gscale = 4.0 * (a + b) * L * L * L + 2.0 * c * L;
  std::vector<Vec3d> lines;
  for (Stratum s : kStrata) {
    const Vec3d d = to_double(direction(s));
    const double len = norm(d);
    for (const Vec3Q& p : orbit(direction(s)).points) {
      Vec3d e = to_double(p);
      lines.push_back({e[0] / len, e[1] / len, e[2] / len});
    }
  }
  int count = 0;
  const int n = grid.n;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const double v = grid.values[grid.index(i, j, k)];
        if (std::abs(v) > h * h * fscale) continue;
        const Vec3d p{grid.coord(i), grid.coord(j), grid.coord(k)};
        if (norm(q.gradient(p)) > h * gscale) continue;
        double dist = norm(p);
        for (const Vec3d& e : lines) {
          const double dot = p[0] * e[0] + p[1] * e[1] + p[2] * e[2];
          const Vec3d r{p[0] - dot * e[0], p[1] - dot * e[1], p[2] - dot * e[2]};
          dist = std::min(dist, norm(r));
        }
        if (dist > 2.0 * h) ++count;
      }
  return count;
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::inconclusive: return "inconclusive";
  }
  return "?";
}

OracleReport verify(const QuarticCoefficients& q, const TopologyReport& report, int n) {
  OracleReport out;
  out.half_width = choose_box(q);
  const Rational& L = out.half_width;
  if (n < 16) n = 16;
  if (n % 2) ++n;

  int res = n;
  SignGrid grid;
  ComponentLabels comps;
  while (true) {
    grid = evaluate_grid(q, L, res);
    comps = count_components(grid);
    if (2 * res > kMaxResolution) break;
    SignGrid fine = evaluate_grid(q, L, 2 * res);
    ComponentLabels fine_comps = count_components(fine);
    if (!comps.inconclusive && !fine_comps.inconclusive && comps.count() == fine_comps.count()) {
      out.stable = true;
      break;
    }
    res *= 2;
  }
  out.resolution = res;
  out.component_count = comps.count();
  out.boundary_touching = comps.boundary_touching;
  out.min_abs_value = grid.min_abs_value();

  for (std::size_t s = 0; s < kStrata.size(); ++s) {
    LineRestriction lr = line_restriction(q, kStrata[s]);
    out.ray_root_counts[s] = ray_root_count(q, kStrata[s], L);
    out.symbolic_roots[s] = lr.positive_roots;
    out.tangent[s] = lr.identically_zero || lr.double_positive_root.has_value();
  }
  out.singular_candidates = refine_singularities(q, strata_singularities(q));
  AxisNesting nest = nesting_depth(grid, comps);
  out.nesting_depth = nest.components_pierced;
  out.axis_sign_changes = nest.sign_changes;
  out.suspects = off_strata_suspects(q, grid);

  auto& bad = out.mismatches;
  const double h = grid.spacing();
  const double scale = 12.0 * (std::abs(q.A.get_d()) + std::abs(q.B.get_d())) * L.get_d() * L.get_d() +
                       2.0 * std::abs(q.C.get_d());

  if (comps.count() == 0) {
    if (report.components == 0) {
      // nothing to compare beyond the empty verdict
    } else if (!report.sign_change && out.min_abs_value < h * h * scale) {
      out.degenerate_locus_detected = true;
    } else {
      bad.push_back("grid sees no zero-cell but the classifier reports " +
                    std::to_string(report.components) + " components");
    }
  } else {
    if (!report.unbounded && comps.count() != report.components)
      bad.push_back("component count " + std::to_string(comps.count()) + " vs classifier " +
                    std::to_string(report.components));
    if ((comps.boundary_touching > 0) != report.unbounded)
      bad.push_back("boundary-touching components " + std::to_string(comps.boundary_touching) +
                    " vs classifier unbounded=" + (report.unbounded ? "true" : "false"));
    if (out.nesting_depth != report.nesting_depth)
      bad.push_back("axis nesting " + std::to_string(out.nesting_depth) + " vs classifier " +
                    std::to_string(report.nesting_depth));
  }
  for (std::size_t s = 0; s < kStrata.size(); ++s)
    if (!out.tangent[s] && out.ray_root_counts[s] != out.symbolic_roots[s])
      bad.push_back(std::string(to_string(kStrata[s])) + " ray crossings " +
                    std::to_string(out.ray_root_counts[s]) + " vs positive roots " +
                    std::to_string(out.symbolic_roots[s]));

  std::multiset<std::size_t> found, claimed;
  for (const auto& c : out.singular_candidates) {
    if (!c.accepted)
      bad.push_back("singular candidate on " + std::string(to_string(c.locus)) + " not confirmed");
    found.insert(c.orbit_size);
  }
  for (const auto& o : report.singular_orbits) claimed.insert(o.size);
  if (found != claimed) bad.push_back("singular orbit sizes differ from the classifier");

  if (!out.stable)
    out.agreement = Agreement::inconclusive;
  else if (!bad.empty())
    out.agreement = Agreement::disagree;
  else
    out.agreement = Agreement::agree;
  return out;
}

}  // namespace octaq
