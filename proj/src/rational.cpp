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

#include "gately/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "gately/errors.hpp"

namespace gately {
namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw GameError(ErrorCode::kParseError,
                  "malformed numeric literal '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_literal(whole);
  mpz_class value(std::string(text), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = parse_integer(text.substr(e + 1), whole);
    if (!ez.fits_slong_p() || std::abs(ez.get_si()) > 100000) bad_literal(whole);
    exponent = ez.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_literal(whole);
    if (!int_part.empty() && !all_digits(int_part)) bad_literal(whole);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(whole);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) bad_literal(whole);
    digits = std::string(text);
  }
  if (digits.empty()) bad_literal(whole);
  Rational value(mpz_class(digits, 10));
  if (exponent > 0) {
    value *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= pow10(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) bad_literal(whole);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(text.substr(0, slash)), whole);
    mpz_class den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) {
      throw GameError(ErrorCode::kParseError,
                      "zero denominator in '" + std::string(whole) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text, whole);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw GameError(ErrorCode::kInvalidParameter, "non-finite value");
  }
  return Rational(value);
}

std::string format_decimal(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

double parse_real(std::string_view text) {
  return to_double(parse_rational(text));
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

std::optional<unsigned long> exact_exponent(double alpha) {
  if (!(alpha >= 1.0) || alpha > static_cast<double>(kMaxExactExponent)) {
    return std::nullopt;
  }
  if (std::floor(alpha) != alpha) return std::nullopt;
  return static_cast<unsigned long>(alpha);
}

std::vector<double> to_doubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

}  // namespace gately
