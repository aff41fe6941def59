// Copyright 2026 The cubevol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace cubevol {

// Exact arithmetic backbone. mpq_class keeps values canonical
// (gcd(|num|, den) = 1, den > 0) through all ring operations.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical rational from machine integers. mpq_class(p, q) alone does
/// not reduce, and GMP comparisons silently misbehave on unreduced values.
Rational frac(long num, long den);

/// Returns the canonicalized copy of a possibly unreduced rational.
Rational canonical(Rational value);

/// Parses "p/q", "p", or a plain decimal like "-0.25" (converted exactly).
Rational parse_rational(const std::string& text);

/// Canonical "p/q" (or just "p" when the denominator is 1).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// r^p with a nonnegative integer exponent.
Rational pow_rational(const Rational& base, unsigned long exp);

/// Truncated power (max{r,0})^p. For p = 0 the value is 1 when r > 0 and 0
/// otherwise; the r = 0 choice only affects measure-zero boundary levels.
Rational truncated_power(const Rational& base, unsigned long exp);

/// Integer-cleared view of a list of rationals: values[i] == scaled[i]/denom
/// with denom = lcm of all denominators. The exact kernels run on these
/// integers so the 2^n-term sums touch a single big-integer accumulator.
struct ClearedIntegers {
    std::vector<Integer> scaled;
    Integer denom;
};

ClearedIntegers clear_denominators(std::span<const Rational> values);

Integer factorial_integer(unsigned long n);

}  // namespace cubevol
