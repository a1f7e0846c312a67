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

#include "wdk/weitzenbock.hpp"

namespace wdk {

Derivation::Derivation(Partition partition) : partition_(std::move(partition)), image_(partition_.arity()) {
    for (std::size_t j = 0; j < image_.size(); ++j)
        if (partition_.offset_of(j) > 0)
            image_[j] = j - 1;
}

void Derivation::check_arity(std::size_t arity) const {
    if (arity != this->arity())
        throw ArityMismatch("Derivation: operand has " + std::to_string(arity) + " variables, derivation has " +
                            std::to_string(this->arity()));
}

std::vector<std::vector<Rational>> Derivation::matrix() const {
    const std::size_t d = arity();
    std::vector<std::vector<Rational>> alpha(d, std::vector<Rational>(d));
    for (std::size_t j = 0; j < d; ++j)
        if (image_[j])
            alpha[*image_[j]][j] = Rational(1);
    return alpha;
}

Polynomial Derivation::apply(const Polynomial &p) const {
    check_arity(p.arity());
    Polynomial out(p.arity());
    for (const auto &[m, c] : p.terms())
        for (std::size_t j = 0; j < m.arity(); ++j) {
            if (m[j] == 0 || !image_[j])
                continue;
            Monomial n = m;
            n.set(j, m[j] - 1);
            n.set(*image_[j], n[*image_[j]] + 1);
            out.add_term(n, c * Rational(static_cast<long>(m[j])));
        }
    return out;
}

WreathElement Derivation::apply(const WreathElement &u) const {
    check_arity(u.arity());
    const std::size_t d = arity();
    WreathElement out(d);
    for (std::size_t j = 0; j < d; ++j) {
        out.a(j) += apply(u.a()[j]);
        if (image_[j]) {
            out.a(*image_[j]) += u.a()[j];
            out.b(*image_[j]) += u.b()[j];
        }
    }
    return out;
}

LieElement Derivation::apply(const LieElement &e) const {
    check_arity(e.arity());
    const std::size_t d = arity();
    LieElement out(d);
    for (std::size_t j = 0; j < d; ++j)
        if (image_[j] && !e.linear()[j].is_zero())
            out.add_linear(static_cast<unsigned>(*image_[j]), e.linear()[j]);
    for (const auto &[m, c] : e.terms()) {
        const auto word = m.word();
        for (std::size_t pos = 0; pos < word.size(); ++pos) {
            if (!image_[word[pos]])
                continue;
            auto w = word;
            w[pos] = static_cast<unsigned>(*image_[word[pos]]);
            out += LieElement::from_word(d, w) * c;
        }
    }
    return out;
}

std::vector<Bidegree> Derivation::bidegree_assignment() const {
    std::vector<Bidegree> out;
    out.reserve(arity());
    for (std::size_t j = 0; j < arity(); ++j)
        out.push_back(partition_.bidegree_of(j));
    return out;
}

Bidegree Derivation::bidegree(const Monomial &m) const {
    check_arity(m.arity());
    Bidegree b;
    for (std::size_t j = 0; j < m.arity(); ++j) {
        const auto v = partition_.bidegree_of(j);
        b.first += v.first * m[j];
        b.second += v.second * m[j];
    }
    return b;
}

bool Derivation::is_nilpotent() const {
    const auto alpha = matrix();
    const std::size_t d = arity();
    auto power = alpha;
    for (std::size_t k = 1; k < d; ++k) {
        std::vector<std::vector<Rational>> next(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                if (power[i][l].is_zero())
                    continue;
                for (std::size_t j = 0; j < d; ++j)
                    next[i][j] += power[i][l] * alpha[l][j];
            }
        power = std::move(next);
    }
    for (const auto &row : power)
        for (const auto &x : row)
            if (!x.is_zero())
                return false;
    return true;
}

Polynomial Derivation::exp_apply(const Polynomial &p) const {
    Polynomial sum = p;
    Polynomial term = p;
    long k = 1;
    while (true) {
        term = apply(term) * (Rational(1) / Rational(k));
        if (term.is_zero())
            break;
        sum += term;
        ++k;
    }
    return sum;
}

} // namespace wdk
