// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/classify.hpp"
#include "octaq/quadric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octaq {

// Corner (i,j,k) sits at (L/n) * (2i-n, 2j-n, 2k-n).
struct SignGrid {
  Rational half_width;
  int n = 0;
  std::vector<double> values;
  std::vector<std::int8_t> signs;  // exact

  std::size_t side() const { return static_cast<std::size_t>(n) + 1; }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * side() + j) * side() + k;
  }
  double coord(int i) const;
  double spacing() const;  // 2L/n
  double min_abs_value() const;
  bool has_strict_sign_change() const;
};

Rational choose_box(const QuarticCoefficients& q);

SignGrid evaluate_grid(const QuarticCoefficients& q, const Rational& L, int n);
SignGrid evaluate_grid_serial(const QuarticCoefficients& q, const Rational& L, int n);

struct ComponentInfo {
  std::int64_t cells = 0;
  std::array<int, 3> lo{}, hi{};
  bool touches_boundary = false;
  bool has_zero_corner = false;

  int max_extent() const;
};

struct ComponentLabels {
  int n = 0;
  std::vector<std::int32_t> labels;  // per cell, -1 when not a zero-cell
  std::vector<ComponentInfo> components;
  int boundary_touching = 0;
  bool inconclusive = false;

  int count() const { return static_cast<int>(components.size()); }
  std::size_t cell(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  }
};

ComponentLabels count_components(const SignGrid& grid);
ComponentLabels count_components_serial(const SignGrid& grid);

int ray_root_count(const QuarticCoefficients& q, Stratum s, const Rational& L, int samples = 4096);

struct SingularCandidate {
  Locus locus;
  std::size_t orbit_size = 0;
  bool whole_line = false;
  Vec3d point{};
  double f_residual = 0, grad_residual = 0;
  int iterations = 0;
  bool converged = false;
  bool accepted = false;
};

std::vector<SingularCandidate> refine_singularities(const QuarticCoefficients& q,
                                                    const std::vector<SingularOrbit>& candidates);

struct AxisNesting {
  int components_pierced = 0;
  int sign_changes = 0;
};

AxisNesting nesting_depth(const SignGrid& grid, const ComponentLabels& labels);

// Grid corners away from the symmetry lines where f and its gradient are both small.
int off_strata_suspects(const QuarticCoefficients& q, const SignGrid& grid);

enum class Agreement { agree, disagree, inconclusive };
std::string_view to_string(Agreement a);

struct OracleReport {
  int resolution = 0;
  Rational half_width;
  bool stable = false;
  int component_count = 0;
  int boundary_touching = 0;
  std::array<int, 3> ray_root_counts{};
  std::array<int, 3> symbolic_roots{};
  std::array<bool, 3> tangent{};
  std::vector<SingularCandidate> singular_candidates;
  bool degenerate_locus_detected = false;
  double min_abs_value = 0;
  int nesting_depth = 0;
  int axis_sign_changes = 0;
  int suspects = 0;
  Agreement agreement = Agreement::inconclusive;
  std::vector<std::string> mismatches;
};

inline constexpr int kMaxResolution = 256;

OracleReport verify(const QuarticCoefficients& q, const TopologyReport& report, int n = 64);

}  // namespace octaq
