// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace octaq {

using Rational = mpq_class;
using Vec3Q = std::array<Rational, 3>;
using Vec3d = std::array<double, 3>;

// Accepts "7", "-3/4", "0.125", "1e-3" style decimals; always exact.
Rational parse_rational(std::string_view text);
// p/q in lowest terms
Rational frac(long p, long q);

std::string to_string(const Rational& q);
double to_double(const Rational& q);
int sign(const Rational& q);

bool is_square(const Rational& q);
// Exact square root of a rational perfect square.
Rational exact_sqrt(const Rational& q);

Vec3d to_double(const Vec3Q& p);

}  // namespace octaq
