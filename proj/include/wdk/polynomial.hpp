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

#ifndef WDK_POLYNOMIAL_HPP
#define WDK_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdk/rational.hpp"

namespace wdk {

/// Thrown when two operands live in rings of different arity.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponent = std::uint32_t;

/// Exponent vector x_1^{e_1} ... x_n^{e_n}; the arity is the vector length.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recount(); }
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { recount(); }

    static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

    std::size_t arity() const { return exps_.size(); }
    std::uint64_t degree() const { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, Exponent e) {
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = e;
    }

    Monomial operator*(const Monomial &o) const;
    Monomial &operator*=(const Monomial &o);
    bool divides(const Monomial &o) const;
    /// Requires divides(o); returns o / *this.
    Monomial quotient_of(const Monomial &o) const;
    Monomial pow(Exponent k) const;

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps_ == b.exps_; }

    /// "x1^2*x3" style; "1" for the unit monomial.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void recount();

    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded lexicographic order with x_1 < x_2 < ... < x_n: total degree first,
/// then the exponent of the highest variable decides.
struct GrlexLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse multivariate polynomial over Rational; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t arity) : arity_(arity) {}
    Polynomial(std::size_t arity, const Rational &c);
    explicit Polynomial(const Monomial &m, const Rational &c = Rational(1));

    static Polynomial variable(std::size_t arity, std::size_t index);
    /// Parses "x2^2 - 2*x1*x3 + 3/2*x4" with variables named by `names`
    /// (default x1..xn). Throws std::invalid_argument.
    static Polynomial parse(std::string_view text, std::size_t arity,
                            std::span<const std::string> names = {});

    std::size_t arity() const { return arity_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(const Monomial &m) const;
    /// Highest total degree of any term; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;

    /// Adds c*m, removing the term if it cancels.
    void add_term(const Monomial &m, const Rational &c);

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) { return mul(a, b); }
    Polynomial &operator*=(const Polynomial &o) { return *this = mul(*this, o); }

    Polynomial mul_monomial(const Monomial &m) const;
    Polynomial pow(unsigned k) const;
    /// Partial derivative with respect to variable `index`.
    Polynomial derivative(std::size_t index) const;
    /// Keeps terms of total degree <= n.
    Polynomial truncated(std::uint64_t n) const;
    /// Keeps terms whose exponent of variable `index` is <= n.
    Polynomial truncated_in(std::size_t index, Exponent n) const;
    Polynomial homogeneous_part(std::uint64_t n) const;
    /// Exact quotient, or nullopt when `divisor` does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial &divisor) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string to_string(std::span<const std::string> names = {}) const;

    static Polynomial mul(const Polynomial &a, const Polynomial &b);

private:
    std::size_t arity_ = 0;
    TermMap terms_;
};

/// Ring homomorphism x_i -> images[i]. All images must share one arity.
Polynomial substitute(const Polynomial &p, std::span<const Polynomial> images);

/// Names x1..xn.
std::vector<std::string> default_names(std::size_t arity);

} // namespace wdk

#endif // WDK_POLYNOMIAL_HPP
