// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/rational.hpp"

#include <array>
#include <compare>
#include <vector>

namespace octaq {

using Mat3i = std::array<std::array<int, 3>, 3>;

struct GroupElement {
  Mat3i m{};

  static GroupElement identity();
  bool is_signed_permutation() const;
  int determinant() const;
  GroupElement inverse() const;  // transpose
  Vec3Q apply(const Vec3Q& p) const;
  Vec3d apply(const Vec3d& p) const;
  // Maps lattice index offsets; valid because entries are in {-1,0,1}.
  std::array<long, 3> apply(const std::array<long, 3>& p) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  auto operator<=>(const GroupElement&) const = default;
};

// Quarter turns about x and y, and the reflection in z = 0.
std::array<GroupElement, 3> generators();

// Closure of the generators, sorted.
std::vector<GroupElement> generate_group();

// Cached copy of generate_group().
const std::vector<GroupElement>& octahedral_group();

struct Orbit {
  Vec3Q representative;
  std::vector<Vec3Q> points;  // sorted, distinct
  std::size_t size() const { return points.size(); }
  bool contains(const Vec3Q& p) const;
};

Orbit orbit(const Vec3Q& p);

struct Invariants {
  Rational u, v, w;
};

Invariants invariants_uvw(const Vec3Q& p);

// {0 <= Z <= X <= Y} in quadric coordinates.
bool in_fundamental_cone(const Vec3Q& P);
// {x >= 0, 0 <= y <= x, 0 <= z <= x}
bool in_fundamental_tetrahedron(const Vec3Q& p);

// The six elements that permute coordinates without sign changes.
std::vector<GroupElement> coordinate_permutations();

bool vec_less(const Vec3Q& a, const Vec3Q& b);

}  // namespace octaq
