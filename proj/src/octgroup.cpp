// SPDX-License-Identifier: Apache-2.0
#include "octaq/octgroup.hpp"

#include <algorithm>
#include <set>

namespace octaq {

GroupElement GroupElement::identity() {
  GroupElement g;
  for (int i = 0; i < 3; ++i) g.m[i][i] = 1;
  return g;
}

bool GroupElement::is_signed_permutation() const {
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      if (m[i][j] < -1 || m[i][j] > 1) return false;
      row += m[i][j] != 0;
      col += m[j][i] != 0;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

int GroupElement::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GroupElement GroupElement::inverse() const {
  GroupElement t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
  return t;
}

Vec3Q GroupElement::apply(const Vec3Q& p) const {
  Vec3Q r;
  for (int i = 0; i < 3; ++i) {
    r[i] = 0;
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != 0) r[i] += m[i][j] * p[j];
  }
  return r;
}

Vec3d GroupElement::apply(const Vec3d& p) const {
  Vec3d r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p[j];
  return r;
}

std::array<long, 3> GroupElement::apply(const std::array<long, 3>& p) const {
  std::array<long, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p[j];
  return r;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
  return c;
}

std::array<GroupElement, 3> generators() {
  GroupElement g1{{{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}}};
  GroupElement g2{{{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}}}};
  GroupElement g3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}};
  return {g1, g2, g3};
}

std::vector<GroupElement> generate_group() {
  auto gens = generators();
  std::set<GroupElement> seen{GroupElement::identity()};
  std::vector<GroupElement> frontier{GroupElement::identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        GroupElement p = g * h;
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

const std::vector<GroupElement>& octahedral_group() {
  static const std::vector<GroupElement> group = generate_group();
  return group;
}

bool vec_less(const Vec3Q& a, const Vec3Q& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool Orbit::contains(const Vec3Q& p) const {
  return std::binary_search(points.begin(), points.end(), p, vec_less);
}

Orbit orbit(const Vec3Q& p) {
  Orbit o;
  o.representative = p;
  for (const auto& g : octahedral_group()) o.points.push_back(g.apply(p));
  std::sort(o.points.begin(), o.points.end(), vec_less);
  o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
  return o;
}

Invariants invariants_uvw(const Vec3Q& p) {
  Rational x2 = p[0] * p[0], y2 = p[1] * p[1], z2 = p[2] * p[2];
  return {x2 + y2 + z2, x2 * y2 + y2 * z2 + z2 * x2, x2 * y2 * z2};
}

bool in_fundamental_cone(const Vec3Q& P) {
  return sgn(P[2]) >= 0 && P[2] <= P[0] && P[0] <= P[1];
}

bool in_fundamental_tetrahedron(const Vec3Q& p) {
  return sgn(p[0]) >= 0 && sgn(p[1]) >= 0 && p[1] <= p[0] && sgn(p[2]) >= 0 && p[2] <= p[0];
}

std::vector<GroupElement> coordinate_permutations() {
  std::vector<GroupElement> out;
  for (const auto& g : octahedral_group()) {
    bool nonneg = true;
    for (const auto& row : g.m)
      for (int e : row) nonneg = nonneg && e >= 0;
    if (nonneg) out.push_back(g);
  }
  return out;
}

}  // namespace octaq
