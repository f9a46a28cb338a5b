// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/quadric.hpp"

#include <cstddef>
#include <vector>

namespace octaq {

// Where P(w) sits relative to the levels 0, -1/4, -1/3 that the direction
// function v/u^2 attains on the axes, face diagonals and space diagonals.
enum class Band : int {
  above = 0,
  axis_level = 1,
  axis_band = 2,
  face_level = 3,
  diagonal_band = 4,
  diagonal_level = 5,
  below = 6,
};

Band band_of(const Rational& p);

// Exact topological facts read off the radial profile
// P(w) = (B + C w + D w^2) / A, w = 1/u.
struct ProfileFacts {
  int components = 0;
  bool unbounded = false;
  int nesting_depth = 0;
  bool sign_change = false;
  std::vector<std::size_t> singular_sizes;  // sorted
  std::vector<Band> bands;                  // visited in order of decreasing radius
};

ProfileFacts radial_profile(const QuarticCoefficients& q);

}  // namespace octaq
