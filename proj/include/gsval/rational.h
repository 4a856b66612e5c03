// Copyright 2026 The Authors.
//
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

#ifndef GSVAL_RATIONAL_H_
#define GSVAL_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gsval {

// Exact arbitrary-precision fraction. GMP keeps mpq values canonical (lowest
// terms, positive denominator) as long as every value entering the type goes
// through ParseRational or arithmetic.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on
// malformed input or a zero denominator. The result is canonicalized, so
// "3/6" parses to 1/2.
Rational ParseRational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string ToString(const Rational& value);

inline Rational MakeRational(int64_t num, int64_t den = 1) {
  Rational r{mpz_class(static_cast<long>(num)),
             mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

// Largest multiple of 1/denominator that is <= x, where x is given as a double.
// The double is treated as an approximation; one extra unit is subtracted so
// the result is a guaranteed lower bound of the real number x approximates
// (as long as the double is accurate to within 1/denominator).
Rational FloorToDenominator(double x, int64_t denominator);

}  // namespace gsval

#endif  // GSVAL_RATIONAL_H_
