// SPDX-License-Identifier: Apache-2.0
#include "octaq/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace octaq {

namespace {

// Pulls the largest square factor out of a nonnegative integer, by trial division
// up to a small bound; what is left stays under the root.
void extract_square(mpz_class& n, mpz_class& out) {
  out = 1;
  if (n == 0) return;
  for (unsigned long p = 2; p < 2000; ++p) {
    mpz_class pp = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      out *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    out *= r;
    n = 1;
  }
}

}  // namespace

Surd Surd::sqrt_of(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("square root of negative rational");
  if (sgn(r) == 0) return Surd{Rational(0), Rational(0)};
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = r.get_num() * r.get_den();
  mpz_class outside;
  extract_square(pq, outside);
  Surd s;
  s.multiplier = Rational(outside, r.get_den());
  s.multiplier.canonicalize();
  s.radicand = Rational(pq);
  return s;
}

double Surd::value() const { return multiplier.get_d() * std::sqrt(radicand.get_d()); }

std::string Surd::str() const {
  if (sgn(multiplier) == 0 || sgn(radicand) == 0) return "0";
  if (radicand == 1) return multiplier.get_str();
  if (multiplier == 1) return "sqrt(" + radicand.get_str() + ")";
  return multiplier.get_str() + "*sqrt(" + radicand.get_str() + ")";
}

double NestedRadical::value() const {
  return std::sqrt(base.get_d() + coeff.get_d() * std::sqrt(inner.get_d()));
}

std::string NestedRadical::str() const {
  if (sgn(coeff) == 0) return Surd::sqrt_of(base).str();
  std::string s = "sqrt(" + base.get_str();
  Surd in = Surd::sqrt_of(inner);
  Rational c = coeff * in.multiplier;
  if (in.radicand == 1) {
    Rational v = base + c;
    return Surd::sqrt_of(v).str();
  }
  s += sgn(c) < 0 ? " - " : " + ";
  Rational ac = abs(c);
  if (ac != 1) s += ac.get_str() + "*";
  s += "sqrt(" + in.radicand.get_str() + "))";
  return s;
}

}  // namespace octaq
