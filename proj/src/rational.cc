// Copyright 2026 The Optimin Authors.
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

#include "optimin/rational.h"

#include <stdexcept>
#include <utility>

#include "optimin/errors.h"

namespace optimin {
namespace {

// Canonical integer: "0" or optional '-' followed by digits without a
// leading zero.
bool IsCanonicalInteger(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  if (s.front() == '-') {
    if (!allow_sign) return false;
    s.remove_prefix(1);
    if (s == "0") return false;  // "-0"
  }
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s.front() != '0';
}

mpz_class MakeInteger(std::int64_t v) {
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(MakeInteger(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(MakeInteger(numerator), MakeInteger(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsCanonicalInteger(text, true)) {
      throw ParseError("not a canonical rational: \"" + std::string(text) +
                       "\"");
    }
    return Rational(mpq_class(mpz_class(std::string(text))));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!IsCanonicalInteger(num, true) || !IsCanonicalInteger(den, false)) {
    throw ParseError("not a canonical rational: \"" + std::string(text) +
                     "\"");
  }
  const mpz_class n(std::string{num});
  const mpz_class d(std::string{den});
  if (d == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  if (d == 1) {
    throw ParseError("non-canonical rational (unit denominator): \"" +
                     std::string(text) + "\"");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw ParseError("non-canonical rational (not reduced): \"" +
                     std::string(text) + "\"");
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::ToString() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.value_) == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace optimin
