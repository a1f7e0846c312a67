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
#include "wdk/weitzenbock.hpp"

using namespace wdk;

namespace {

Polynomial P(const std::string &text, std::size_t arity) { return Polynomial::parse(text, arity, default_names(arity)); }

Derivation D(std::vector<unsigned> cells) { return Derivation::from_partition(Partition(std::move(cells))); }

} // namespace

TEST_CASE("construction from a partition") {
    const auto d2 = D({2});
    CHECK(d2.arity() == 3);
    CHECK(d2.apply(P("x1", 3)).is_zero());
    CHECK(d2.apply(P("x2", 3)) == P("x1", 3));
    CHECK(d2.apply(P("x3", 3)) == P("x2", 3));

    const auto d11 = D({1, 1});
    CHECK(d11.apply(P("x1", 4)).is_zero());
    CHECK(d11.apply(P("x2", 4)) == P("x1", 4));
    CHECK(d11.apply(P("x3", 4)).is_zero());
    CHECK(d11.apply(P("x4", 4)) == P("x3", 4));
    const auto m = d11.matrix();
    CHECK(m[0][1] == Rational(1));
    CHECK(m[2][3] == Rational(1));
    CHECK(m[1][0] == Rational(0));

    const auto zero = D({0});
    CHECK(zero.apply(P("x1", 1)).is_zero());
    CHECK_THROWS_AS(Partition({}), InvalidPartition);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
}

TEST_CASE("action on polynomials") {
    CHECK(D({2}).apply(P("x2^2-2*x1*x3", 3)).is_zero());
    CHECK(D({1, 1}).apply(P("x1*x4-x2*x3", 4)).is_zero());
    CHECK(D({2}).apply(P("x3", 3)) == P("x2", 3));
    CHECK_THROWS(D({2}).apply(P("x1", 4)));
}

TEST_CASE("action on wreath elements") {
    const auto d1 = D({1});
    CHECK(d1.apply(embed(LieElement::parse("[x2,x1]", 2))).is_zero());
    const auto d2 = D({2});
    for (unsigned j = 0; j < 3; ++j)
        CHECK(d2.apply(embed(LieElement::generator(3, j))) == embed(d2.apply(LieElement::generator(3, j))));
    CHECK(d2.apply(embed(LieElement::parse("[x3,x1]", 3))) == embed(LieElement::parse("[x2,x1]", 3)));
}

TEST_CASE("bidegree assignment") {
    const auto b2 = D({2}).bidegree_assignment();
    CHECK(b2 == std::vector<Bidegree>{{2, 0}, {1, 1}, {0, 2}});
    const auto b11 = D({1, 1}).bidegree_assignment();
    CHECK(b11 == std::vector<Bidegree>{{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    CHECK(D({0}).bidegree_assignment() == std::vector<Bidegree>{{0, 0}});
}

TEST_CASE("constants are invariant under the exponential") {
    const auto d3 = D({3});
    const Polynomial f4 = P("x2^2*x3^2-2*x2^3*x4+6*x1*x2*x3*x4-8/3*x1*x3^3-3*x1^2*x4^2", 4);
    CHECK(d3.apply(f4).is_zero());
    CHECK(d3.exp_apply(f4) == f4);
    CHECK(d3.exp_apply(P("x2", 4)) == P("x1+x2", 4));
}

TEST_CASE("property: nilpotency for every partition with d <= 8") {
    testing::Random rnd(8);
    for (int t = 0; t < 100; ++t) {
        const Partition p = rnd.partition(8);
        CHECK(Derivation(p).is_nilpotent());
    }
}

TEST_CASE("property: Leibniz rule on 200 random pairs") {
    testing::Random rnd(1234);
    for (int t = 0; t < 200; ++t) {
        const Derivation delta(rnd.partition(6));
        const std::size_t d = delta.arity();
        const Polynomial p = rnd.polynomial(d), q = rnd.polynomial(d);
        CHECK(delta.apply(p * q) == delta.apply(p) * q + p * delta.apply(q));
        CHECK(delta.apply(p + q) == delta.apply(p) + delta.apply(q));
    }
}

TEST_CASE("property: derivation commutes with the embedding on 100 random elements") {
    testing::Random rnd(4321);
    for (int t = 0; t < 100; ++t) {
        const Derivation delta(rnd.partition(6));
        const std::size_t d = delta.arity();
        if (d < 2)
            continue;
        const LieElement e = rnd.lie_element(d);
        CHECK(delta.apply(embed(e)) == embed(delta.apply(e)));
        // A derivation of the Lie algebra: delta [u, v] = [delta u, v] + [u, delta v].
        const auto u = embed(rnd.lie_element(d)), v = embed(rnd.lie_element(d));
        CHECK(delta.apply(wreath_bracket(u, v)) ==
              wreath_bracket(delta.apply(u), v) + wreath_bracket(u, delta.apply(v)));
    }
}

TEST_CASE("property: the derivation moves bidegree (a,b) to (a+1,b-1)") {
    testing::Random rnd(55);
    for (int t = 0; t < 100; ++t) {
        const Derivation delta(rnd.partition(6));
        const Monomial m = rnd.monomial(delta.arity(), 4);
        const Bidegree b = delta.bidegree(m);
        const Polynomial image = delta.apply(Polynomial(m));
        for (const auto &[n, c] : image.terms()) {
            CHECK(n.degree() == m.degree());
            CHECK(delta.bidegree(n) == Bidegree{b.first + 1, b.second - 1});
        }
    }
}
