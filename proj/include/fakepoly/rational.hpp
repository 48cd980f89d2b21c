#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fakepoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace fakepoly
