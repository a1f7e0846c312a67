/* Copyright 2026 The wdk Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "wdk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wdk {

Rational::Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw std::invalid_argument("Rational::parse: bad numerator in '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num_text));
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text))
        throw std::invalid_argument("Rational::parse: bad denominator in '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_text);
    if (den == 0)
        throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(parse_integer(num_text), den);
}

std::string Rational::to_string() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace wdk
