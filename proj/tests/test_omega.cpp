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

#include <array>

#include "random_inputs.hpp"
#include "wdk/omega.hpp"

using namespace wdk;

namespace {

Polynomial T(const std::string &text) { return Polynomial::parse(text, 3, series_names()); }

Polynomial T2(const std::string &text) {
    static const std::vector<std::string> names = {"t1", "t2"};
    return Polynomial::parse(text, 2, names);
}

NiceRational whole(std::vector<unsigned> cells) {
    const Partition p(std::move(cells));
    return gl2_substitute(hilbert_free_metabelian(p.arity()), p);
}

Polynomial swap_t(const Polynomial &p) {
    Polynomial out(p.arity());
    for (const auto &[m, c] : p.terms()) {
        std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
        std::swap(e[0], e[1]);
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

const std::vector<std::vector<unsigned>> kTable = {{1},    {2},    {3},    {1, 1}, {4},
                                                    {2, 1}, {5},    {3, 1}, {2, 2}, {1, 1, 1}};

} // namespace

TEST_CASE("free metabelian series") {
    const auto h2 = hilbert_free_metabelian(2).expand(3).terms();
    CHECK(h2.coefficient(Monomial({1, 1})) == Rational(1));
    CHECK(h2.coefficient(Monomial({2, 1})) == Rational(1));
    CHECK(h2.coefficient(Monomial({1, 0})) == Rational(1));
    CHECK(h2.coefficient(Monomial({0, 0})) == Rational(0));
    CHECK(hilbert_free_metabelian(3).expand(3).terms().coefficient(Monomial({1, 1, 1})) == Rational(2));
    CHECK(hilbert_free_metabelian(3, true).expand(3).terms().coefficient(Monomial({1, 0, 0})) == Rational(0));
    CHECK_THROWS(hilbert_free_metabelian(1));
}

TEST_CASE("GL2 substitution") {
    CHECK(gl2_images(Partition({1})) == std::vector<Monomial>{Monomial({1, 0, 1}), Monomial({0, 1, 1})});
    CHECK(gl2_images(Partition({2})) ==
          std::vector<Monomial>{Monomial({2, 0, 1}), Monomial({1, 1, 1}), Monomial({0, 2, 1})});
    CHECK(gl2_images(Partition({1, 1})) == std::vector<Monomial>{Monomial({1, 0, 1}), Monomial({0, 1, 1}),
                                                                 Monomial({1, 0, 1}), Monomial({0, 1, 1})});
    CHECK_THROWS_AS(gl2_substitute(hilbert_free_metabelian(3), Partition({1})), ArityMismatch);
}

TEST_CASE("Schur decomposition") {
    using Result = std::vector<std::pair<Bidegree, Rational>>;
    CHECK(schur_decompose(T2("t1*t2")) == Result{{{1, 1}, Rational(1)}});
    CHECK(schur_decompose(T2("t1^2+t1*t2+t2^2")) == Result{{{2, 0}, Rational(1)}});
    const auto sq = schur_decompose(T2("(t1+t2)^2"));
    CHECK(sq.size() == 2);
    CHECK(std::find(sq.begin(), sq.end(), std::pair<Bidegree, Rational>{{2, 0}, Rational(1)}) != sq.end());
    CHECK(std::find(sq.begin(), sq.end(), std::pair<Bidegree, Rational>{{1, 1}, Rational(1)}) != sq.end());
    CHECK_THROWS_AS(schur_decompose(T2("t1")), NotSymmetric);
}

TEST_CASE("truncated multiplicity series") {
    CHECK(multiplicity_series_truncated(whole({1}), 4).terms() ==
          T("t1*z + t1*t2*z^2 + t1^2*t2*z^3 + t1^3*t2*z^4"));
    CHECK(multiplicity_series_truncated(whole({2}), 3).terms() ==
          T("t1^2*z + t1^3*t2*z^2 + (t1^5*t2 + t1^4*t2^2)*z^3"));
    CHECK(multiplicity_series_truncated(whole({1}), 1).terms() == T("t1*z"));
}

TEST_CASE("Omega operator") {
    const std::array<int, 2> w = {1, -1};
    const NiceRational f(Polynomial(2, Rational(1)), {{Monomial({1, 0}), 1}, {Monomial({0, 1}), 1}});
    CHECK(omega_nonneg(XiLaurent::from_nice(f, w)) ==
          NiceRational(Polynomial(2, Rational(1)), {{Monomial({1, 0}), 1}, {Monomial({1, 1}), 1}}));
    const NiceRational g = NiceRational::geometric(Monomial({0, 1}));
    CHECK(omega_nonneg(XiLaurent::from_nice(g, w)) == NiceRational(Polynomial(2, Rational(1))));
    const std::array<int, 2> none = {0, 0};
    CHECK(omega_nonneg(XiLaurent::from_nice(f, none)) == f);
}

TEST_CASE("closed multiplicity series") {
    const auto closed = [](std::vector<unsigned> cells) { return multiplicity_series_closed(whole(std::move(cells))); };
    CHECK(closed({1}) == NiceRational(T("t1*z")) + NiceRational(T("t1*t2*z^2"), {{Monomial({1, 0, 1}), 1}}));
    CHECK(closed({2}) == NiceRational(T("t1^2*z")) +
                             NiceRational(T("t1^3*t2*z^2"), {{Monomial({2, 0, 1}), 1}, {Monomial({1, 1, 1}), 1}}));
    CHECK(closed({1, 1}) ==
          NiceRational(T("2*t1*z")) + NiceRational(T("t1*z^2*(t1+3*t2-t1^2*t2*z^2)"),
                                                   {{Monomial({1, 0, 1}), 2}, {Monomial({1, 1, 2}), 1}}));
}

TEST_CASE("closed form agrees with the oracle to z^12 for d <= 4") {
    for (const auto &cells : kTable) {
        const Partition p(cells);
        if (p.arity() > 4)
            continue;
        const auto h = whole(cells);
        CHECK(multiplicity_series_closed(h).expand(12, z_grading()).terms() ==
              multiplicity_series_truncated(h, 12).terms());
    }
}

TEST_CASE("multiplicities are non-negative and t-specialization gives dimensions") {
    for (const auto &cells : kTable) {
        const Partition p(cells);
        const auto ms = multiplicity_series_truncated(whole(cells), p.arity() <= 5 ? 8 : 6).terms();
        for (const auto &[m, c] : ms.terms())
            CHECK(c.sign() > 0);
        CHECK(specialize_t(ms).arity() == 1);
    }
}

TEST_CASE("property: Schur reconstruction on 200 random symmetric polynomials") {
    testing::Random rnd(2718);
    for (int t = 0; t < 200; ++t) {
        const Polynomial half = rnd.polynomial(2, 5, 6);
        Polynomial sym = half;
        for (const auto &[m, c] : half.terms())
            sym.add_term(Monomial({m[1], m[0]}), c);
        Polynomial rebuilt(2);
        for (const auto &[lambda, mult] : schur_decompose(sym))
            rebuilt += schur_polynomial(lambda) * mult;
        CHECK(rebuilt == sym);
    }
}

TEST_CASE("property: (t1 - t2) H is skew-symmetric") {
    for (const auto &cells : kTable) {
        const auto h = whole(cells).expand(5, z_grading()).terms();
        const Polynomial f = T("t1 - t2") * h;
        CHECK(swap_t(f) == -f);
    }
}
