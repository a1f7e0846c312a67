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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_inputs.hpp"
#include "wdk/metabelian.hpp"
#include "wdk/omega.hpp"

using namespace wdk;

namespace {

Polynomial P(const std::string &text, std::size_t arity) { return Polynomial::parse(text, arity, default_names(arity)); }

/// sum a_i f_i with zero b-part from texts.
WreathElement A(std::vector<std::string> coords) {
    const std::size_t d = coords.size();
    std::vector<Polynomial> a;
    for (const auto &c : coords)
        a.push_back(P(c, d));
    return WreathElement(std::move(a), std::vector<Rational>(d));
}

WreathElement gen(std::size_t d, unsigned j) { return embed(LieElement::generator(d, j)); }

} // namespace

TEST_CASE("normal forms") {
    CHECK_THROWS(LieMonomial(3, 0, 1, {}));
    CHECK_THROWS(LieMonomial(3, 2, 1, {0}));
    const auto e = LieElement::from_word(3, {0, 1});
    CHECK(e.to_string() == "-[x2,x1]");
    CHECK(LieElement::from_word(3, {1, 1, 0}).is_zero());
    // [x3,x1,x2] stays, [x3,x2,x1] = [x3,x1,x2] - [x2,x1,x3].
    CHECK(LieElement::from_word(3, {2, 1, 0}) == LieElement::parse("[x3,x1,x2] - [x2,x1,x3]", 3));
    CHECK(LieElement::parse("2([x4,x1]-x3)", 4).to_string() == "-2*x3 + 2[x4,x1]");
}

TEST_CASE("embedding") {
    CHECK(embed(LieElement::parse("[x2,x1]", 2)) == A({"-x2", "x1"}));
    const WreathElement x1 = embed(LieElement::generator(2, 0));
    CHECK(x1.a()[0] == P("1", 2));
    CHECK(x1.b()[0] == Rational(1));
    CHECK(embed(LieElement::parse("[x2,x1,x1]", 2)) == A({"-x1*x2", "x1^2"}));
}

TEST_CASE("wreath bracket") {
    CHECK(wreath_bracket(gen(2, 1), gen(2, 0)) == A({"-x2", "x1"}));
    const WreathElement u = embed(LieElement::parse("x1 + 2[x2,x1]", 2));
    CHECK(wreath_bracket(u, u).is_zero());
    const auto c1 = embed(LieElement::parse("[x2,x1]", 4));
    const auto c2 = embed(LieElement::parse("[x4,x3]", 4));
    CHECK(wreath_bracket(c1, c2).is_zero());
}

TEST_CASE("module action") {
    const WreathElement u = A({"-x2", "x1"});
    CHECK(module_action(u, P("x1", 2)) == A({"-x1*x2", "x1^2"}));
    CHECK(module_action(u, P("1", 2)) == u);
    CHECK(module_action(u, Polynomial(2)).is_zero());
    CHECK_THROWS_AS(module_action(gen(2, 0), P("x1", 2)), std::invalid_argument);
}

TEST_CASE("commutator membership") {
    CHECK(in_commutator_ideal(A({"-x2", "x1"})));
    CHECK_FALSE(in_commutator_ideal(A({"1", "0"})));
    CHECK_FALSE(in_commutator_ideal(gen(2, 0)));
}

TEST_CASE("inverse of the embedding") {
    CHECK(lie_from_wreath(A({"-x2", "x1"})) == LieElement::parse("[x2,x1]", 2));
    CHECK(lie_from_wreath(WreathElement(3)).is_zero());
    // 2([x4,x2,x2] - [x4,x1,x3] - [x4,x3,x1]) from its coordinates.
    const LieElement pi2 = LieElement::parse("2([x4,x2,x2]-[x4,x1,x3]-[x4,x3,x1])", 4);
    CHECK(lie_from_wreath(embed(pi2)) == pi2);
    CHECK_THROWS_AS(lie_from_wreath(A({"1", "0"})), NotInImage);
}

TEST_CASE("basis slices") {
    const auto two = basis_slice(2, 3);
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_string() == "[x2,x1,x1]");
    CHECK(two[1].to_string() == "[x2,x1,x2]");
    const auto three = basis_slice(Monomial({1, 1, 1}));
    REQUIRE(three.size() == 2);
    CHECK(three[0].to_string() == "[x2,x1,x3]");
    CHECK(three[1].to_string() == "[x3,x1,x2]");
    CHECK(basis_slice(Monomial({1, 1})).size() == 1);
}

TEST_CASE("basis sizes match the free metabelian series") {
    for (std::size_t d = 2; d <= 6; ++d) {
        const std::uint64_t n_max = d <= 4 ? 8 : 5;
        const auto series = hilbert_free_metabelian(d, true).expand(n_max).terms();
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            Rational total(0);
            for (const auto &[m, c] : series.terms())
                if (m.degree() == n)
                    total += c;
            CHECK(Rational(static_cast<long>(basis_slice(d, n).size())) == total);
        }
    }
}

TEST_CASE("Jacobi identity on generators") {
    for (std::size_t d = 2; d <= 6; ++d)
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                for (unsigned k = 0; k < d; ++k) {
                    const auto xi = gen(d, i), xj = gen(d, j), xk = gen(d, k);
                    const auto sum = wreath_bracket(wreath_bracket(xi, xj), xk) +
                                     wreath_bracket(wreath_bracket(xj, xk), xi) +
                                     wreath_bracket(wreath_bracket(xk, xi), xj);
                    CHECK(sum.is_zero());
                }
}

TEST_CASE("property: bracket bilinearity, antisymmetry and the metabelian law on 100 instances") {
    testing::Random rnd(404);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(2, 5));
        const auto u = embed(rnd.lie_element(d)), v = embed(rnd.lie_element(d)), w = embed(rnd.lie_element(d));
        const Rational s = rnd.rational();
        CHECK(wreath_bracket(u * s + v, w) == wreath_bracket(u, w) * s + wreath_bracket(v, w));
        CHECK(wreath_bracket(w, u * s + v) == wreath_bracket(w, u) * s + wreath_bracket(w, v));
        CHECK(wreath_bracket(u, v) == -wreath_bracket(v, u));
        const auto c1 = embed(rnd.commutator_element(d)), c2 = embed(rnd.commutator_element(d));
        CHECK(wreath_bracket(c1, c2).is_zero());
        CHECK(wreath_bracket(wreath_bracket(u, v), wreath_bracket(v, w)).is_zero());
    }
}

TEST_CASE("property: membership is closed under brackets and the module action on 100 instances") {
    testing::Random rnd(17);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(2, 5));
        const auto u = embed(rnd.lie_element(d)), v = embed(rnd.lie_element(d));
        const auto bracket = wreath_bracket(u, v);
        CHECK(in_commutator_ideal(bracket));
        const auto c = embed(rnd.commutator_element(d));
        CHECK(in_commutator_ideal(c));
        CHECK(in_commutator_ideal(module_action(c, rnd.polynomial(d))));
        CHECK(in_commutator_ideal(module_action(bracket, rnd.polynomial(d))));
    }
}

TEST_CASE("property: embedding round trip on 100 random elements") {
    testing::Random rnd(99);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(2, 6));
        const LieElement e = rnd.lie_element(d);
        CHECK(lie_from_wreath(embed(e)) == e);
        const auto p = rnd.polynomial(d, 2, 2);
        const auto c = embed(rnd.commutator_element(d));
        const auto q = rnd.polynomial(d, 2, 2);
        CHECK(module_action(module_action(c, p), q) == module_action(c, p * q));
    }
}
