// Copyright 2026 The Gately Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATELY_RATIONAL_HPP
#define GATELY_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gately {

// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Accepts "p/q", signed integers and decimals with an optional exponent
// ("2.25", "-1e-3"). Decimals are converted exactly. Throws GameError
// (ParseError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Exact value of a finite binary double.
Rational from_double(double value);

// Fixed-width decimal rendering with `digits` significant digits ("%.*g").
std::string format_decimal(double value, int digits = 12);

// Parses a decimal or "p/q" literal to the nearest double.
double parse_real(std::string_view text);

// Raises a rational to a non-negative integer power exactly.
Rational pow(const Rational& base, unsigned long exponent);

Rational sum(std::span<const Rational> values);

// The integer value of `alpha` if it is a positive integer small enough for
// exact power evaluation; exact arithmetic is used for these exponents.
std::optional<unsigned long> exact_exponent(double alpha);

inline constexpr unsigned long kMaxExactExponent = 10000;

std::vector<double> to_doubles(std::span<const Rational> values);

}  // namespace gately

#endif  // GATELY_RATIONAL_HPP
