// Copyright 2026 The Collat Authors.
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

#ifndef COLLAT_RATIONAL_H_
#define COLLAT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace collat {

// Exact arbitrary-precision rational. Every monetary quantity in the library
// (investments, costs, returns, utilities, collaterals) is a Rational; the
// tie rule makes equality cases load-bearing, so no floating point is used
// anywhere in the solvers.
using Rational = mpq_class;
using Money = Rational;

// num / den in canonical form. Prefer this to the two-argument mpq_class
// constructor, which leaves the fraction unreduced and breaks comparisons.
Rational ratio(long num, long den);

// Parses "p", "-p" or "p/q" (decimal integers, q != 0) into canonical form.
// Decimal literals such as "0.5" are rejected; the error message suggests the
// equivalent fraction. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Human-oriented decimal rendering with `significant` digits. Reports only.
std::string decimal_hint(const Rational& value, int significant = 6);

bool is_integer(const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace collat

#endif  // COLLAT_RATIONAL_H_
