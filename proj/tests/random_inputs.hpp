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

// Seeded generators of random inputs for the property suites.

#ifndef WDK_TESTS_RANDOM_INPUTS_HPP
#define WDK_TESTS_RANDOM_INPUTS_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "wdk/metabelian.hpp"
#include "wdk/partition.hpp"
#include "wdk/polynomial.hpp"

namespace wdk::testing {

class Random {
public:
    explicit Random(std::uint32_t seed) : gen_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational() {
        int num = integer(-9, 9);
        if (num == 0)
            num = 1;
        return Rational(num) / Rational(integer(1, 4));
    }

    Monomial monomial(std::size_t arity, int max_degree) {
        std::vector<Exponent> e(arity, 0);
        const int deg = integer(0, max_degree);
        for (int k = 0; k < deg; ++k)
            ++e[static_cast<std::size_t>(integer(0, static_cast<int>(arity) - 1))];
        return Monomial(std::move(e));
    }

    Polynomial polynomial(std::size_t arity, int max_terms = 4, int max_degree = 3) {
        Polynomial p(arity);
        const int terms = integer(0, max_terms);
        for (int k = 0; k < terms; ++k)
            p.add_term(monomial(arity, max_degree), rational());
        return p;
    }

    /// Random polynomial without constant term (at least one term).
    Polynomial augmentation_element(std::size_t arity, int max_terms = 4, int max_degree = 3) {
        Polynomial p(arity);
        while (p.is_zero()) {
            p = polynomial(arity, max_terms, max_degree);
            p.add_term(Monomial(arity), -p.coefficient(Monomial(arity)));
        }
        return p;
    }

    std::vector<unsigned> word(std::size_t arity, int min_length, int max_length) {
        std::vector<unsigned> w(static_cast<std::size_t>(integer(min_length, max_length)));
        for (auto &x : w)
            x = static_cast<unsigned>(integer(0, static_cast<int>(arity) - 1));
        return w;
    }

    /// Random element of the commutator ideal.
    LieElement commutator_element(std::size_t arity, int max_terms = 3, int max_length = 4) {
        LieElement e(arity);
        const int terms = integer(1, max_terms);
        for (int k = 0; k < terms; ++k)
            e += LieElement::from_word(arity, word(arity, 2, max_length)) * rational();
        return e;
    }

    LieElement lie_element(std::size_t arity) {
        LieElement e = commutator_element(arity);
        for (std::size_t i = 0; i < arity; ++i)
            if (integer(0, 2) == 0)
                e.add_linear(static_cast<unsigned>(i), rational());
        return e;
    }

    /// Non-increasing cells with arity at most max_arity.
    Partition partition(std::size_t max_arity) {
        std::vector<unsigned> cells;
        std::size_t used = 0;
        unsigned cap = static_cast<unsigned>(max_arity) - 1;
        while (used < max_arity) {
            const unsigned p = static_cast<unsigned>(integer(0, static_cast<int>(cap)));
            if (used + p + 1 > max_arity)
                break;
            cells.push_back(p);
            used += p + 1;
            cap = p;
            if (integer(0, 2) == 0)
                break;
        }
        if (cells.empty())
            cells.push_back(0);
        return Partition(cells);
    }

    std::mt19937 &engine() { return gen_; }

private:
    std::mt19937 gen_;
};

} // namespace wdk::testing

#endif // WDK_TESTS_RANDOM_INPUTS_HPP
