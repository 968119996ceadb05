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

#include "qlogic/rational.hpp"

#include <sstream>

#include "qlogic/errors.hpp"

namespace qlogic {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    // Division of two canonical integer rationals canonicalizes the result.
    return Rational(num) / Rational(den);
}

namespace {

bool is_integer_token(std::string_view t) {
    if (!t.empty() && t.front() == '-') {
        t.remove_prefix(1);
    }
    if (t.empty()) {
        return false;
    }
    for (char c : t) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

BigInt parse_big(std::string_view t, std::string_view whole) {
    if (!is_integer_token(t)) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    return BigInt(std::string(t));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_big(text, text));
    }
    BigInt num = parse_big(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw ParseError("negative denominator in '" + std::string(text) + "'");
    }
    BigInt den = parse_big(den_text, text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;  // GMP canonical form: "n" or "n/d"
    return os.str();
}

std::string to_string(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += to_string(v[i]);
    }
    return out;
}

}  // namespace qlogic
