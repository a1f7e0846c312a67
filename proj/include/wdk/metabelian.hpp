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

// Free metabelian Lie algebra L_d/L_d'' in two representations: normal-form
// left-normed commutators [x_j1, x_j2, x_j3, ..., x_jk] with j1 > j2 <= j3
// <= ... <= jk, and coordinates in the abelian wreath product A_d wr B_d,
// where x_j maps to a_j + b_j.
//
// Variable indices are 0-based in code and 1-based in every rendering.

#ifndef WDK_METABELIAN_HPP
#define WDK_METABELIAN_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdk/polynomial.hpp"

namespace wdk {

/// Normal-form commutator [x_head, x_second, tail...] of L_d'/L_d''.
class LieMonomial {
public:
    /// Throws std::invalid_argument unless head > second <= every tail entry.
    LieMonomial(std::size_t arity, unsigned head, unsigned second, std::vector<unsigned> tail);

    std::size_t arity() const { return arity_; }
    unsigned head() const { return head_; }
    unsigned second() const { return second_; }
    const std::vector<unsigned> &tail() const { return tail_; }
    std::size_t degree() const { return 2 + tail_.size(); }
    Monomial multidegree() const;
    /// Full index word (head, second, tail...).
    std::vector<unsigned> word() const;

    /// Degree, then head pair (graded lexicographically), then tail.
    friend std::strong_ordering operator<=>(const LieMonomial &a, const LieMonomial &b);
    friend bool operator==(const LieMonomial &a, const LieMonomial &b) = default;

    std::string to_string() const;

private:
    std::size_t arity_;
    unsigned head_;
    unsigned second_;
    std::vector<unsigned> tail_;
};

/// Element of L_d/L_d'': a linear part in span(x_1..x_d) plus a commutator
/// part in normal form. Zero coefficients are never stored.
class LieElement {
public:
    using TermMap = std::map<LieMonomial, Rational>;

    explicit LieElement(std::size_t arity = 0) : linear_(arity) {}

    static LieElement generator(std::size_t arity, unsigned index);
    static LieElement monomial(const LieMonomial &m, const Rational &c = Rational(1));
    /// Any left-normed word [x_w0, x_w1, ...], rewritten into normal form with
    /// the metabelian and Jacobi identities. Length-1 words are generators.
    static LieElement from_word(std::size_t arity, const std::vector<unsigned> &word);
    /// Parses e.g. "3[x2,x1,x4] - 2[x3,x1,x3] + [x3,x2,x2]", "2([x4,x1]-x3)".
    static LieElement parse(std::string_view text, std::size_t arity);

    std::size_t arity() const { return linear_.size(); }
    const std::vector<Rational> &linear() const { return linear_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const;
    bool is_commutator() const;

    void add_linear(unsigned index, const Rational &c);
    void add_term(const LieMonomial &m, const Rational &c);

    LieElement operator-() const;
    LieElement &operator+=(const LieElement &o);
    LieElement &operator-=(const LieElement &o);
    LieElement &operator*=(const Rational &c);
    friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational &c) { return a *= c; }
    friend LieElement operator*(const Rational &c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement &a, const LieElement &b) = default;

    /// Component of total degree n (n = 1 is the linear part).
    LieElement homogeneous_part(std::size_t n) const;
    /// Same element viewed in a larger free metabelian algebra.
    LieElement extended(std::size_t arity) const;

    std::string to_string() const;

private:
    std::vector<Rational> linear_;
    TermMap terms_;
};

/// sum_i a_i f_i + sum_i beta_i b_i in A_d wr B_d.
class WreathElement {
public:
    explicit WreathElement(std::size_t arity = 0);
    WreathElement(std::vector<Polynomial> a, std::vector<Rational> b);

    std::size_t arity() const { return b_.size(); }
    const std::vector<Polynomial> &a() const { return a_; }
    const std::vector<Rational> &b() const { return b_; }
    Polynomial &a(std::size_t i) { return a_[i]; }
    Rational &b(std::size_t i) { return b_[i]; }
    bool is_zero() const;
    bool has_zero_b_part() const;

    WreathElement operator-() const;
    WreathElement &operator+=(const WreathElement &o);
    WreathElement &operator-=(const WreathElement &o);
    WreathElement &operator*=(const Rational &c);
    friend WreathElement operator+(WreathElement a, const WreathElement &b) { return a += b; }
    friend WreathElement operator-(WreathElement a, const WreathElement &b) { return a -= b; }
    friend WreathElement operator*(WreathElement a, const Rational &c) { return a *= c; }
    friend WreathElement operator*(const Rational &c, WreathElement a) { return a *= c; }
    friend bool operator==(const WreathElement &a, const WreathElement &b) = default;

    std::string to_string() const;

private:
    std::vector<Polynomial> a_;
    std::vector<Rational> b_;
};

/// Raised by lie_from_wreath when the input is not an epsilon-image.
class NotInImage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The Shmel'kin embedding epsilon: x_j -> a_j + b_j.
WreathElement embed(const LieElement &e);
/// epsilon of an arbitrary left-normed word.
WreathElement embed_word(std::size_t arity, const std::vector<unsigned> &word);

WreathElement wreath_bracket(const WreathElement &u, const WreathElement &v);

/// u * p for u in C_d (zero b-part): every a-coordinate multiplied by p.
/// Throws std::invalid_argument when u has a nonzero b-part.
WreathElement module_action(const WreathElement &u, const Polynomial &p);

/// b-part zero and sum_i x_i f_i = 0.
bool in_commutator_ideal(const WreathElement &u);

/// Inverse of embed on its image. Throws NotInImage.
LieElement lie_from_wreath(const WreathElement &u);

/// Normal forms of total degree n (n >= 2), in canonical order.
std::vector<LieMonomial> basis_slice(std::size_t arity, std::size_t degree);
/// Normal forms of the given multidegree, in canonical order.
std::vector<LieMonomial> basis_slice(const Monomial &multidegree);

} // namespace wdk

#endif // WDK_METABELIAN_HPP
