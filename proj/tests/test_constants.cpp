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

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "random_inputs.hpp"
#include "wdk/constants.hpp"
#include "wdk/omega.hpp"

using namespace wdk;

namespace {

Polynomial P(const std::string &text, std::size_t arity) { return Polynomial::parse(text, arity, default_names(arity)); }
LieElement L(const std::string &text, std::size_t arity) { return LieElement::parse(text, arity); }
Derivation D(std::vector<unsigned> cells) { return Derivation(Partition(std::move(cells))); }

/// Rank of a list of polynomials.
std::size_t poly_rank(const std::vector<Polynomial> &list) {
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (const auto &p : list)
        for (const auto &[m, c] : p.terms())
            index.try_emplace(m, index.size());
    std::vector<linalg::IntVector> rows;
    for (const auto &p : list) {
        linalg::RatVector v;
        for (const auto &[m, c] : p.terms())
            v.emplace_back(index.at(m), c);
        std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        rows.push_back(linalg::to_integer(v));
    }
    return linalg::rank(rows);
}

/// All products of generators of total degree n.
std::vector<Polynomial> products_of_degree(const std::vector<Polynomial> &gens, std::size_t n) {
    std::vector<Polynomial> out;
    std::function<void(std::size_t, Polynomial)> rec = [&](std::size_t start, Polynomial p) {
        const auto deg = static_cast<std::size_t>(p.degree());
        if (deg == n) {
            out.push_back(p);
            return;
        }
        for (std::size_t j = start; j < gens.size(); ++j)
            if (deg + static_cast<std::size_t>(gens[j].degree()) <= n)
                rec(j, p * gens[j]);
    };
    rec(0, Polynomial(gens.front().arity(), Rational(1)));
    return out;
}

/// Both lists generate the same subalgebra up to degree n.
bool same_subalgebra(const std::vector<Polynomial> &a, const std::vector<Polynomial> &b, std::size_t n) {
    for (std::size_t k = 1; k <= n; ++k) {
        auto pa = products_of_degree(a, k), pb = products_of_degree(b, k);
        const std::size_t ra = poly_rank(pa), rb = poly_rank(pb);
        pa.insert(pa.end(), pb.begin(), pb.end());
        if (ra != rb || poly_rank(pa) != ra)
            return false;
    }
    return true;
}

GeneratorSet listed_set(std::vector<unsigned> cells, std::vector<std::string> fs, std::vector<std::string> cs) {
    const Partition p(std::move(cells));
    GeneratorSet g{p, {}, {}};
    for (const auto &f : fs)
        g.algebra.push_back(P(f, p.arity()));
    for (const auto &c : cs)
        g.module.push_back(make_generator(p, L(c, p.arity())));
    return g;
}

GeneratorSet delta2_set() {
    return listed_set({2}, {"x1", "x2^2-2*x1*x3"}, {"[x2,x1]", "[x3,x1,x1]-[x2,x1,x2]"});
}

GeneratorSet delta11_set() {
    return listed_set({1, 1}, {"x1", "x3", "x1*x4-x2*x3"}, {"[x3,x1]", "[x2,x1]", "[x4,x3]", "[x4,x1]-[x3,x2]"});
}

std::multiset<std::pair<unsigned, unsigned>> bidegrees(const GeneratorSet &g) {
    std::multiset<std::pair<unsigned, unsigned>> out;
    for (const auto &c : g.module)
        out.emplace(c.bidegree.first, c.bidegree.second);
    return out;
}

} // namespace

TEST_CASE("kernel slices") {
    const auto s1 = kernel_slice(D({1}), Space::commutator, 2);
    REQUIRE(s1.dimension() == 1);
    CHECK(normalized(s1.lie_elements[0]) == normalized(L("[x2,x1]", 2)));

    const auto s2 = kernel_slice(D({2}), Space::whole_lie, 3);
    CHECK(s2.dimension() == 2);
    for (const auto &e : s2.lie_elements)
        CHECK(D({2}).apply(embed(e)).is_zero());

    const auto s3 = kernel_slice(D({3}), Space::polynomial, 1);
    REQUIRE(s3.dimension() == 1);
    CHECK(s3.polynomials[0] == P("x1", 4));
}

TEST_CASE("kernel dimensions") {
    CHECK(kernel_dimensions(D({1}), Space::whole_lie, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(kernel_dimensions(D({2}), Space::whole_lie, 5) == std::vector<std::size_t>{1, 1, 2, 3, 4});
    // 2z + z^2 (4 - z^2) / ((1-z)^2 (1-z^2)) = 2z + 4z^2 + 8z^3 + 15z^4 + ...
    CHECK(kernel_dimensions(D({1, 1}), Space::whole_lie, 4) == std::vector<std::size_t>{2, 4, 8, 15});
}

TEST_CASE("kernel bases are exact") {
    for (const auto &cells : std::vector<std::vector<unsigned>>{{2}, {3}, {1, 1}, {2, 1}}) {
        const auto delta = D(cells);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const auto &p : kernel_slice(delta, Space::polynomial, n).polynomials)
                CHECK(delta.apply(p).is_zero());
            if (n >= 2)
                for (const auto &w : kernel_slice(delta, Space::commutator, n).wreath_elements) {
                    CHECK(delta.apply(w).is_zero());
                    CHECK(in_commutator_ideal(w));
                }
        }
    }
}

TEST_CASE("kernel dimensions agree with the multiplicity series") {
    for (const auto &cells : std::vector<std::vector<unsigned>>{{1}, {2}, {3}, {1, 1}, {2, 1}, {2, 0}, {1, 0, 0}}) {
        const Partition p(cells);
        const auto delta = D(cells);
        const std::size_t n = 6;
        const auto bi = bigraded_series(bigraded_kernel_dimensions(delta, Space::whole_lie, n));
        const auto oracle = multiplicity_series_truncated(gl2_substitute(hilbert_free_metabelian(p.arity()), p), n);
        CHECK(bi == oracle.terms());
        const auto poly = bigraded_series(bigraded_kernel_dimensions(delta, Space::polynomial, n));
        auto poly_oracle = multiplicity_series_truncated(gl2_substitute(hilbert_polynomial_ring(p.arity()), p), n).terms();
        poly_oracle.add_term(Monomial(3), Rational(-1));
        CHECK(poly == poly_oracle);
    }
}

TEST_CASE("invariant generators") {
    const auto g2 = invariant_generators(D({2}), 2);
    CHECK(same_subalgebra(g2, {P("x1", 3), P("x2^2-2*x1*x3", 3)}, 6));
    CHECK(g2.size() == 2);
    const auto g11 = invariant_generators(D({1, 1}), 2);
    CHECK(g11.size() == 3);
    CHECK(same_subalgebra(g11, {P("x1", 4), P("x3", 4), P("x1*x4-x2*x3", 4)}, 5));
    const auto g3 = invariant_generators(D({3}), 4);
    CHECK(g3.size() == 4);
    CHECK(same_subalgebra(g3, *builtin_invariants(Partition({3})), 6));
}

TEST_CASE("built-in invariants") {
    const auto six = *builtin_invariants(Partition({1, 1, 1}));
    std::vector<Polynomial> expected;
    for (const auto *f : {"x1", "x3", "x5", "x1*x4-x2*x3", "x1*x6-x2*x5", "x3*x6-x4*x5"})
        expected.push_back(P(f, 6));
    CHECK(six == expected);
    CHECK(*builtin_invariants(Partition({1, 1})) == std::vector<Polynomial>{P("x1", 4), P("x3", 4), P("x1*x4-x2*x3", 4)});
    CHECK(*builtin_invariants(Partition({2})) == std::vector<Polynomial>{P("x1", 3), P("x2^2-2*x1*x3", 3)});
    CHECK_FALSE(builtin_invariants(Partition({4})).has_value());
    // Cross-check against the degree-by-degree construction.
    for (const auto &cells : std::vector<std::vector<unsigned>>{{2, 0}, {1, 1, 0}, {3}})
        CHECK(same_subalgebra(*builtin_invariants(Partition(cells)), invariant_generators(D(cells), 6), 6));
}

TEST_CASE("module generators for delta(2)") {
    const auto found = module_generators(D({2}), *builtin_invariants(Partition({2})), 3);
    REQUIRE(found.generators.module.size() == 2);
    CHECK(found.relations.empty());
    const auto listed = delta2_set();
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(normalized(found.generators.module[j].element) == normalized(listed.module[j].element));
}

TEST_CASE("module generators for delta(1,1)") {
    const auto listed = delta11_set();
    const auto found = module_generators(D({1, 1}), listed.algebra, 4);
    CHECK(found.generators.module.size() == 4);
    CHECK(bidegrees(found.generators) == bidegrees(listed));
    REQUIRE(found.relations.size() == 1);
    CHECK(verify_relation(found.relations[0], found.generators));
    const auto r = Relation::parse("c1*f3 + c2*f2^2 + c3*f1^2 - c4*f1*f2", 4, 3);
    CHECK(verify_relation(r, listed));
    CHECK(check_generation(D({1, 1}), listed, 6).generates());
}

TEST_CASE("module generators for delta(3)") {
    const auto found = module_generators(D({3}), *builtin_invariants(Partition({3})), 6);
    const std::multiset<std::pair<unsigned, unsigned>> expected = {{5, 1}, {3, 3}, {7, 2}, {5, 4},
                                                                   {7, 5}, {8, 7}, {10, 8}};
    CHECK(bidegrees(found.generators) == expected);
    for (const auto &r : found.relations)
        CHECK(verify_relation(r, found.generators));
    CHECK_THROWS_AS(module_generators(D({3}), {P("x2", 4)}, 3), std::invalid_argument);
}

TEST_CASE("relations") {
    const auto g = delta2_set();
    const auto listed = listed_set({1, 1, 1}, {"x1", "x3", "x5", "x1*x4-x2*x3", "x1*x6-x2*x5", "x3*x6-x4*x5"},
                                 {"[x3,x1]", "[x5,x1]", "[x5,x3]"});
    auto r1 = Relation::parse("c3*f1 + c1*f3 - c2*f2", 3, 6);
    CHECK(verify_relation(r1, listed));
    CHECK(assign_grading(r1, listed));
    CHECK(r1.bidegree == Bidegree{3, 0});
    CHECK_FALSE(verify_relation(Relation::parse("c3*f1 - c1*f3 - c2*f2", 3, 6), listed));
    CHECK_THROWS(Relation::parse("c1*c2", 3, 6));
    CHECK_THROWS(Relation::parse("c4*f1", 3, 6));
    CHECK_THROWS_AS(evaluate_relation(Relation::parse("c3*f1", 3, 6), g), std::invalid_argument);
    CHECK(Relation::parse("c1*f3 + 2*c2*f1^2", 2, 3).to_string() == "2*c2*f1^2 + c1*f3");
}

TEST_CASE("pi map") {
    CHECK(lie_from_wreath(pi_map(P("x1", 3), 4)) == L("[x4,x1]", 4));
    CHECK(lie_from_wreath(pi_map(P("x2^2-2*x1*x3", 3), 4)) == L("2([x4,x2,x2]-[x4,x1,x3]-[x4,x3,x1])", 4));
    CHECK(lie_from_wreath(pi_map(P("x1^2", 3), 4)) == L("2[x4,x1,x1]", 4));
    CHECK_THROWS_AS(pi_map(P("x1+1", 3), 4), std::invalid_argument);
    CHECK_THROWS_AS(pi_map(P("x1", 2), 4), ArityMismatch);
}

TEST_CASE("lifting generators") {
    const auto lifted = lift_generators(D({2, 0}), delta2_set());
    const auto listed = listed_set({2, 0}, {"x1", "x2^2-2*x1*x3", "x4"},
                                 {"[x2,x1]", "[x3,x1,x1]-[x2,x1,x2]", "[x4,x1]",
                                  "2([x4,x2,x2]-[x4,x1,x3]-[x4,x3,x1])"});
    REQUIRE(lifted.module.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(lifted.module[j].element == listed.module[j].element);
    CHECK(lifted.algebra == listed.algebra);
    CHECK(check_generation(D({2, 0}), lifted, 8).generates());

    const GeneratorSet point{Partition({0}), {P("x1", 1)}, {}};
    const auto two = lift_generators(D({0, 0}), point);
    REQUIRE(two.module.size() == 1);
    CHECK(two.module[0].element == L("[x2,x1]", 2));
    CHECK(check_generation(D({0, 0}), two, 6).generates());
    CHECK_THROWS_AS(lift_generators(D({2, 1}), delta2_set()), std::invalid_argument);
}

TEST_CASE("discovered generators span the kernel") {
    for (const auto &cells : std::vector<std::vector<unsigned>>{{1}, {2}, {3}, {1, 1}, {2, 0}, {1, 1, 1}, {1, 0, 0}}) {
        const auto delta = D(cells);
        const std::size_t n = Partition(cells).arity() <= 5 ? 7 : 5;
        const auto found = module_generators(delta, *builtin_invariants(delta.partition()), n);
        CHECK(check_generation(delta, found.generators, n).generates());
    }
}

TEST_CASE("property: pi identities on 200 random pairs") {
    testing::Random rnd(42);
    for (int t = 0; t < 200; ++t) {
        // A derivation whose last cell is 1x1, acting on the first d - 1 variables as .
        Partition base = rnd.partition(5);
        std::vector<unsigned> cells = base.cells();
        cells.push_back(0);
        const Derivation delta{Partition(cells)};
        const Derivation lower(base);
        const std::size_t d = delta.arity();
        const Polynomial u = rnd.augmentation_element(d - 1), v = rnd.augmentation_element(d - 1);
        const auto lhs = pi_map(u * v, d);
        const auto rhs = module_action(pi_map(u, d), extend_arity(v, d)) + module_action(pi_map(v, d), extend_arity(u, d));
        CHECK(lhs == rhs);
        const Polynomial du = lower.apply(u);
        const auto pi_du = du.is_zero() ? WreathElement(d) : pi_map(du, d);
        CHECK(delta.apply(pi_map(u, d)) == pi_du);
        CHECK(in_commutator_ideal(pi_map(u, d)));
        const Rational s = rnd.rational();
        CHECK(pi_map(u * s + v, d) == pi_map(u, d) * s + pi_map(v, d));
    }
}
