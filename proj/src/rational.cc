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

#include "collat/rational.h"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace collat {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// "12.5" -> "25/2", used only to build a helpful error message.
std::string decimal_as_fraction(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) return {};
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = body.substr(dot + 1);
  if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac)) ||
      (whole.empty() && frac.empty())) {
    return {};
  }
  std::string digits = std::string(whole) + std::string(frac);
  if (digits.empty()) digits = "0";
  mpz_class numerator(digits, 10);
  mpz_class denominator = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
  Rational value(numerator, denominator);
  value.canonicalize();
  if (negative) value = -value;
  return to_string(value);
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
    body.remove_prefix(1);
  }
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
    body.remove_suffix(1);
  }
  if (body.find_first_of(".eE") != std::string_view::npos) {
    std::string hint = decimal_as_fraction(body);
    std::string message = "decimal literal \"" + std::string(body) +
                          "\" is not allowed; write an exact fraction";
    if (!hint.empty()) message += " such as \"" + hint + "\"";
    throw std::invalid_argument(message);
  }
  bool negative = false;
  std::string_view digits = body;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  const auto slash = digits.find('/');
  std::string_view num = digits.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : digits.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(body) +
                                "\"; expected \"p\" or \"p/q\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(body) + "\"");
  }
  Rational value(n, d);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string decimal_hint(const Rational& value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant, value.get_d());
  return buffer;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace collat
