// Copyright 2026 The qlogic Authors
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

#ifndef QLOGIC_RATIONAL_HPP
#define QLOGIC_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace qlogic {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator, so equality is plain equality and arithmetic never rounds.
///
/// Construction caveat: always build rationals from integers, make_rational,
/// or parse_rational. The boost string constructor and the (num, unsigned den)
/// constructor do not canonicalize all inputs.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// num/den in lowest terms; den may be negative. Throws InputError on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "n" or "n/d" (optional leading '-', base 10). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

/// Comma-separated to_string of each entry.
std::string to_string(const std::vector<Rational>& v);

}  // namespace qlogic

#endif
