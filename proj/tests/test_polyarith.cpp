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
#include "wdk/linalg.hpp"
#include "wdk/nice_rational.hpp"
#include "wdk/polynomial.hpp"
#include "wdk/rational.hpp"

using namespace wdk;

namespace {

Polynomial P(const std::string &text, std::size_t arity) { return Polynomial::parse(text, arity, default_names(arity)); }

Polynomial Z(const std::string &text) {
    static const std::vector<std::string> names = {"z"};
    return Polynomial::parse(text, 1, names);
}

Polynomial T(const std::string &text) {
    static const std::vector<std::string> names = {"t1", "t2", "z"};
    return Polynomial::parse(text, 3, names);
}

NiceRational geometric_z(unsigned power = 1) { return NiceRational::geometric(Monomial({power})); }

} // namespace

TEST_CASE("rationals are stored reduced") {
    const Rational r(mpz_class(6), mpz_class(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(mpz_class(0), mpz_class(7)).to_string() == "0");
    CHECK(Rational::parse("8/3") * Rational(3) == Rational(8));
    CHECK_THROWS(Rational(1) / Rational(0));

    testing::Random rnd(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rnd.rational(), b = rnd.rational();
        const Rational c = a * b + a / b;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(), c.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(c.denominator() > 0);
    }
}

TEST_CASE("polynomial products") {
    CHECK(P("x1+x2", 2) * P("x1-x2", 2) == P("x1^2-x2^2", 2));
    CHECK((P("x1+x2", 2) * Polynomial(2)).is_zero());
    CHECK(P("x2^2-2*x1*x3", 3) * P("x1", 3) == P("x1*x2^2-2*x1^2*x3", 3));
    CHECK_THROWS_AS(P("x1", 2) * P("x1", 3), ArityMismatch);
}

TEST_CASE("canonical rendering") {
    CHECK(Monomial({2, 0, 1}).to_string() == "x1^2*x3");
    CHECK(P("3/2*x1 - x2^2", 2).to_string() == "-x2^2 + 3/2*x1");
    const NiceRational f(Z("z"), {{Monomial({1}), 2}});
    CHECK(f.to_string(std::vector<std::string>{"z"}) == "(z) / ((1-z)^2)");
}

TEST_CASE("substitution") {
    const std::vector<Polynomial> images = {T("t1*z"), T("t2*z")};
    CHECK(substitute(P("x1*x2", 2), images) == T("t1*t2*z^2"));
    const std::vector<Polynomial> cell = {T("t1^2*z"), T("t1*t2*z"), T("t2^2*z")};
    CHECK(substitute(P("x1+x2+x3", 3), cell) == T("(t1^2+t1*t2+t2^2)*z"));
    const Polynomial p = P("x1^2*x3 - 4*x2 + 1", 3);
    const std::vector<Polynomial> identity = {P("x1", 3), P("x2", 3), P("x3", 3)};
    CHECK(substitute(p, identity) == p);
    CHECK_THROWS(substitute(p, images));
}

TEST_CASE("nice expansion") {
    CHECK(geometric_z().expand(3).terms() == Z("1+z+z^2+z^3"));
    const NiceRational f(Z("z^2"), {{Monomial({1}), 2}});
    CHECK(f.expand(5).terms() == Z("z^2+2*z^3+3*z^4+4*z^5"));
    // Graded series of the delta(3) constants: 0,1,2,4,6,11 for z^0..z^5.
    const NiceRational g = NiceRational(Z("z")) +
                           NiceRational(Z("z^2*(2+z^2+z^3-z^4)"), {{Monomial({1}), 2}, {Monomial({4}), 1}});
    CHECK(g.expand(5).terms() == Z("z+2*z^2+4*z^3+7*z^4+11*z^5"));
    CHECK_THROWS_AS(NiceRational(Z("1"), {{Monomial({0}), 1}}).expand(3), NonInvertibleFactor);
}

TEST_CASE("nice arithmetic") {
    CHECK(nice_arith(geometric_z(), NiceRational(Z("1")), NiceOp::sub) == NiceRational(Z("z"), {{Monomial({1}), 1}}));
    const auto a = NiceRational::geometric(Monomial({1, 0, 1}));
    const auto b = NiceRational::geometric(Monomial({0, 1, 1}));
    const auto ab = nice_arith(a, b, NiceOp::mul);
    CHECK(ab.denominator().size() == 2);
    CHECK(ab == NiceRational(T("1"), {{Monomial({1, 0, 1}), 1}, {Monomial({0, 1, 1}), 1}}));
    // Same function, different factored forms.
    CHECK(NiceRational(Z("1+z"), {{Monomial({2}), 1}}) == geometric_z());
}

TEST_CASE("property: ring axioms on 100 random triples") {
    testing::Random rnd(2024);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(1, 4));
        const Polynomial a = rnd.polynomial(d), b = rnd.polynomial(d), c = rnd.polynomial(d);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b - b == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("property: substitution is a homomorphism on 100 random pairs") {
    testing::Random rnd(77);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(1, 4));
        const std::size_t e = static_cast<std::size_t>(rnd.integer(1, 3));
        std::vector<Polynomial> images;
        for (std::size_t j = 0; j < d; ++j)
            images.push_back(rnd.polynomial(e, 3, 2));
        const Polynomial p = rnd.polynomial(d), q = rnd.polynomial(d);
        CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
        CHECK(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
    }
}

TEST_CASE("property: nice arithmetic agrees with expansion on 100 random pairs") {
    testing::Random rnd(5);
    const auto random_nice = [&](std::size_t d) {
        NiceRational::Denominator den;
        const int factors = rnd.integer(0, 3);
        for (int k = 0; k < factors; ++k) {
            Monomial m = rnd.monomial(d, 2);
            if (m.is_one())
                m = Monomial::variable(d, 0);
            den[m] += static_cast<unsigned>(rnd.integer(1, 2));
        }
        return NiceRational(rnd.polynomial(d, 3, 2), den);
    };
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rnd.integer(1, 3));
        const auto f = random_nice(d), g = random_nice(d);
        const std::uint64_t n = static_cast<std::uint64_t>(rnd.integer(0, 8));
        const auto ef = f.expand(n), eg = g.expand(n);
        CHECK(nice_arith(f, g, NiceOp::add).expand(n) == ef + eg);
        CHECK(nice_arith(f, g, NiceOp::sub).expand(n) == ef - eg);
        CHECK(nice_arith(f, g, NiceOp::mul).expand(n) == ef * eg);
        CHECK(nice_arith(f, g, NiceOp::add) == nice_arith(g, f, NiceOp::add));
    }
}

TEST_CASE("fraction-free elimination") {
    using linalg::IntVector;
    const std::vector<IntVector> columns = {{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{1, 1}}};
    const auto kernel = linalg::nullspace_of_columns(columns);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == IntVector{{0, 2}, {1, -1}});
    CHECK(linalg::rank(columns) == 2);

    // Random integer matrices: every kernel vector annihilates the columns.
    testing::Random rnd(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = static_cast<std::size_t>(rnd.integer(1, 5));
        const std::size_t cols = static_cast<std::size_t>(rnd.integer(1, 6));
        std::vector<IntVector> m(cols);
        for (auto &c : m)
            for (std::size_t r = 0; r < rows; ++r)
                if (const int x = rnd.integer(-2, 2); x != 0)
                    c.emplace_back(r, x);
        const auto ker = linalg::nullspace_of_columns(m);
        CHECK(ker.size() + linalg::rank(m) == cols);
        for (const auto &v : ker) {
            std::vector<mpz_class> sum(rows, 0);
            for (const auto &[j, x] : v)
                for (const auto &[r, y] : m[j])
                    sum[r] += x * y;
            for (const auto &s : sum)
                CHECK(s == 0);
        }
    }
}
