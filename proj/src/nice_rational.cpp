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

#include "wdk/nice_rational.hpp"

#include <algorithm>

namespace wdk {

Polynomial truncate(const Polynomial &p, std::uint64_t order, const Grading &grading) {
    if (!grading.variable)
        return p.truncated(order);
    return p.truncated_in(*grading.variable, static_cast<Exponent>(order));
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t arity, std::uint64_t order, Grading grading)
    : terms_(arity), order_(order), grading_(grading) {}

TruncatedSeries::TruncatedSeries(const Polynomial &p, std::uint64_t order, Grading grading)
    : terms_(truncate(p, order, grading)), order_(order), grading_(grading) {}

void TruncatedSeries::check_compatible(const TruncatedSeries &o) const {
    if (o.arity() != arity())
        throw ArityMismatch("TruncatedSeries: arity mismatch");
    if (!(o.grading_ == grading_))
        throw std::invalid_argument("TruncatedSeries: grading mismatch");
}

Polynomial TruncatedSeries::slice(std::uint64_t n) const {
    Polynomial r(arity());
    for (const auto &[m, c] : terms_.terms())
        if (grading_.weight(m) == n)
            r.add_term(m, c);
    return r;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o) {
    check_compatible(o);
    order_ = std::min(order_, o.order_);
    terms_ = truncate(terms_ + o.terms_, order_, grading_);
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o) {
    check_compatible(o);
    order_ = std::min(order_, o.order_);
    terms_ = truncate(terms_ - o.terms_, order_, grading_);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    a.check_compatible(b);
    const std::uint64_t order = std::min(a.order_, b.order_);
    TruncatedSeries r(a.arity(), order, a.grading_);
    for (const auto &[ma, ca] : a.terms_.terms()) {
        const auto wa = a.grading_.weight(ma);
        if (wa > order)
            continue;
        for (const auto &[mb, cb] : b.terms_.terms())
            if (wa + a.grading_.weight(mb) <= order)
                r.terms_.add_term(ma * mb, ca * cb);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(std::uint64_t order) const {
    return TruncatedSeries(terms_, std::min(order, order_), grading_);
}

// ---------------------------------------------------------------------------
// NiceRational

NiceRational::NiceRational(Polynomial numerator, Denominator denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    for (auto it = denominator_.begin(); it != denominator_.end();) {
        if (it->first.arity() != numerator_.arity())
            throw ArityMismatch("NiceRational: denominator arity mismatch");
        if (it->first.is_one())
            throw NonInvertibleFactor("NiceRational: constant denominator factor (1 - 1)");
        if (it->second == 0)
            it = denominator_.erase(it);
        else
            ++it;
    }
}

NiceRational NiceRational::geometric(const Monomial &m) {
    return NiceRational(Polynomial(m.arity(), Rational(1)), Denominator{{m, 1U}});
}

namespace {

Polynomial one_minus(const Monomial &m) {
    Polynomial p(m.arity(), Rational(1));
    p.add_term(m, Rational(-1));
    return p;
}

Polynomial factor_product(std::size_t arity, const NiceRational::Denominator &den) {
    Polynomial p(arity, Rational(1));
    for (const auto &[m, k] : den)
        p = p * one_minus(m).pow(k);
    return p;
}

/// Least common multiple of two factored denominators (as multisets).
NiceRational::Denominator pooled(const NiceRational::Denominator &a, const NiceRational::Denominator &b) {
    NiceRational::Denominator r = a;
    for (const auto &[m, k] : b) {
        auto &slot = r[m];
        slot = std::max(slot, k);
    }
    return r;
}

/// Factors of `target` missing from `have`.
NiceRational::Denominator missing(const NiceRational::Denominator &target, const NiceRational::Denominator &have) {
    NiceRational::Denominator r;
    for (const auto &[m, k] : target) {
        auto it = have.find(m);
        const unsigned present = it == have.end() ? 0U : it->second;
        if (k > present)
            r.emplace(m, k - present);
    }
    return r;
}

} // namespace

Polynomial NiceRational::denominator_polynomial() const { return factor_product(arity(), denominator_); }

NiceRational operator+(const NiceRational &a, const NiceRational &b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("NiceRational: arity mismatch in sum");
    auto common = pooled(a.denominator_, b.denominator_);
    Polynomial num = a.numerator_ * factor_product(a.arity(), missing(common, a.denominator_)) +
                     b.numerator_ * factor_product(b.arity(), missing(common, b.denominator_));
    return NiceRational(std::move(num), std::move(common));
}

NiceRational operator-(const NiceRational &a, const NiceRational &b) { return a + (-b); }

NiceRational operator*(const NiceRational &a, const NiceRational &b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("NiceRational: arity mismatch in product");
    auto den = a.denominator_;
    for (const auto &[m, k] : b.denominator_)
        den[m] += k;
    return NiceRational(a.numerator_ * b.numerator_, std::move(den));
}

NiceRational operator*(const NiceRational &a, const Polynomial &p) {
    return NiceRational(a.numerator_ * p, a.denominator_);
}

bool operator==(const NiceRational &a, const NiceRational &b) {
    if (a.arity() != b.arity())
        return false;
    const auto common = pooled(a.denominator_, b.denominator_);
    return a.numerator_ * factor_product(a.arity(), missing(common, a.denominator_)) ==
           b.numerator_ * factor_product(b.arity(), missing(common, b.denominator_));
}

NiceRational NiceRational::substitute(std::span<const Monomial> images) const {
    if (images.size() != arity())
        throw ArityMismatch("NiceRational::substitute: need one image per variable");
    std::vector<Polynomial> poly_images;
    poly_images.reserve(images.size());
    for (const auto &m : images)
        poly_images.emplace_back(m);
    Polynomial num = wdk::substitute(numerator_, poly_images);

    Denominator den;
    for (const auto &[m, k] : denominator_) {
        Monomial image(images.front().arity());
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i] > 0)
                image *= images[i].pow(m[i]);
        if (image.is_one())
            throw NonInvertibleFactor("NiceRational::substitute: factor collapses to (1 - 1)");
        den[image] += k;
    }
    return NiceRational(std::move(num), std::move(den));
}

NiceRational NiceRational::divided_by(const Monomial &m) const {
    Polynomial num(arity());
    for (const auto &[mt, c] : numerator_.terms()) {
        if (!m.divides(mt))
            throw std::domain_error("NiceRational::divided_by: numerator not divisible by " + m.to_string());
        num.add_term(m.quotient_of(mt), c);
    }
    return NiceRational(std::move(num), denominator_);
}

NiceRational NiceRational::reduced() const {
    Polynomial num = numerator_;
    Denominator den;
    for (const auto &[m, k] : denominator_) {
        unsigned keep = k;
        while (keep > 0) {
            auto q = num.divide_exact(one_minus(m));
            if (!q)
                break;
            num = std::move(*q);
            --keep;
        }
        if (keep > 0)
            den.emplace(m, keep);
    }
    return NiceRational(std::move(num), std::move(den));
}

TruncatedSeries NiceRational::expand(std::uint64_t order, Grading grading) const {
    Polynomial acc = truncate(numerator_, order, grading);
    for (const auto &[m, k] : denominator_) {
        if (grading.weight(m) == 0)
            throw NonInvertibleFactor("NiceRational::expand: factor (1 - " + m.to_string() +
                                      ") has weight zero in the truncation grading");
        for (unsigned rep = 0; rep < k; ++rep) {
            // acc / (1 - m) = sum_j m^j acc, truncated.
            Polynomial result = acc;
            Polynomial shifted = acc;
            while (true) {
                shifted = truncate(shifted.mul_monomial(m), order, grading);
                if (shifted.is_zero())
                    break;
                result += shifted;
            }
            acc = std::move(result);
        }
    }
    return TruncatedSeries(acc, order, grading);
}

std::string NiceRational::to_string(std::span<const std::string> names) const {
    std::string out = "(" + numerator_.to_string(names) + ")";
    if (denominator_.empty())
        return out;
    out += " / (";
    bool first = true;
    for (const auto &[m, k] : denominator_) {
        if (!first)
            out += " ";
        first = false;
        out += "(1-" + m.to_string(names) + ")";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out + ")";
}

NiceRational nice_arith(const NiceRational &a, const NiceRational &b, NiceOp op) {
    switch (op) {
    case NiceOp::add:
        return a + b;
    case NiceOp::sub:
        return a - b;
    case NiceOp::mul:
        return a * b;
    }
    throw std::invalid_argument("nice_arith: unknown op");
}

} // namespace wdk
