// Copyright 2026 The tempsched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempsched/rational.h"

#include <cctype>
#include <cstdio>

namespace tempsched {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!IsDigits(s)) {
    throw InputError("malformed rational: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rational ParseDecimal(std::string_view s, std::string_view whole) {
  const auto bad = [&] {
    return InputError("malformed rational: '" + std::string(whole) + "'");
  };
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_text = s.substr(e + 1);
    const mpz_class z = ParseInteger(exp_text, whole);
    if (!z.fits_slong_p() || abs(z) > 4096) throw bad();
    exponent = z.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view() : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw bad();
  if (!int_part.empty() && !IsDigits(int_part)) throw bad();
  if (!frac_part.empty() && !IsDigits(frac_part)) throw bad();
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                           exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(numerator, scale)
                            : Rational(numerator * scale, 1);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = ParseInteger(text.substr(0, slash), text);
    const mpz_class den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    return ParseDecimal(text, text);
  }
  return Rational(ParseInteger(text, text));
}

std::string ToString(const Rational& value) { return value.get_str(); }

double ToDouble(const Rational& value) { return value.get_d(); }

std::string ToDecimal(const Rational& value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits,
                value.get_d());
  return buffer;
}

}  // namespace tempsched
