// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/rational.hpp"

#include <string>

namespace octaq {

// multiplier * sqrt(radicand)
struct Surd {
  Rational multiplier{1};
  Rational radicand{0};

  static Surd sqrt_of(const Rational& r);
  double value() const;
  std::string str() const;
  bool operator==(const Surd&) const = default;
};

// sqrt(base + coeff * sqrt(inner))
struct NestedRadical {
  Rational base{0};
  Rational coeff{0};
  Rational inner{0};

  double value() const;
  std::string str() const;
};

}  // namespace octaq
