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

#ifndef TEMPSCHED_RATIONAL_H_
#define TEMPSCHED_RATIONAL_H_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempsched {

// Arbitrary precision rational, always kept in canonical form (positive
// denominator, lowest terms). Every constructor path in this library either
// starts from integers or calls canonicalize().
using Rational = mpq_class;

// Thrown for malformed or out-of-domain user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "num", "num/den", or a finite decimal such as "-0.125" or "2.5e-3".
// Decimals are converted exactly.
Rational ParseRational(std::string_view text);

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

// Decimal rendering with the given number of significant digits (%.*g).
std::string ToDecimal(const Rational& value, int significant_digits = 12);

inline Rational MakeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tempsched

#endif  // TEMPSCHED_RATIONAL_H_
