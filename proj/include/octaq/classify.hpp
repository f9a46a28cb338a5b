// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/profile.hpp"
#include "octaq/quadric.hpp"
#include "octaq/radical.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace octaq {

enum class Family { a_zero, b_zero, c_zero, eps };
std::string_view to_string(Family f);

struct FamilyForm {
  Family family = Family::eps;
  QuarticCoefficients normalized;  // divided by the leading normalizer (A, else B)
  std::optional<Rational> beta;
  std::optional<int> eps1, eps2;
  std::optional<Rational> k;          // 4 D B / C^2
  std::optional<Rational> d_over_c2;  // a_zero: B D / C^2, b_zero: A D / C^2
  std::optional<Rational> b_over_a;   // c_zero
  std::optional<Surd> sphere_k;       // sqrt(1 - 4 B D / C^2) for a_zero
  int c_sign = 0;
  int d_sign = 0;
};

FamilyForm normalize(const QuarticCoefficients& q);

enum class BulletStatus { tabulated, table_conflict, not_tabulated };
std::string_view to_string(BulletStatus s);

struct Bullet {
  std::string id;
  std::string label;
  BulletStatus status = BulletStatus::tabulated;
  int components = 0;
  bool unbounded = false;
  std::vector<std::size_t> singular_sizes;  // sorted
  std::string table_claim;                  // what the case table entry asserts, when it differs
};

// The case table entry that applies to a normalized form.
Bullet select_bullet(const FamilyForm& form);

// Every label the classifier can emit.
const std::vector<std::string>& case_labels();

struct ReportOrbit {
  Locus locus;
  Surd coordinate;  // representative = coordinate * direction
  std::size_t size;
  bool whole_line;
};

struct TopologyReport {
  QuarticCoefficients coefficients;
  std::string case_label;
  int components = 0;
  bool unbounded = false;
  int nesting_depth = 0;
  bool sign_change = false;
  Existence existence = Existence::empty;
  std::vector<ReportOrbit> singular_orbits;
  std::vector<NestedRadical> radii;  // round spheres only
  FamilyForm family;
  Bullet bullet;
  QuadricType quadric;
  std::vector<std::string> conflicts;  // internal disagreements, never expected
};

TopologyReport classify(const QuarticCoefficients& q);

inline constexpr long kMaxRangeNodes = 1000000;

struct Range {
  Rational lo, hi, step;
  std::vector<Rational> nodes() const;
};

Range parse_range(std::string_view text);  // "LO:HI:STEP"

struct SweepSpec {
  Family family = Family::eps;
  int eps1 = 1, eps2 = 1;
  Rational beta = 1;
  Rational c = -1;  // a_zero and b_zero: linear coefficient
  Rational b = -1;  // c_zero: B with A = 1
  Range range;      // k for eps, D otherwise
};

struct SweepRow {
  Rational parameter;
  QuarticCoefficients coefficients;
  std::variant<TopologyReport, std::string> result;
};

std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace octaq
