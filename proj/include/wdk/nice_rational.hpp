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

#ifndef WDK_NICE_RATIONAL_HPP
#define WDK_NICE_RATIONAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdk/polynomial.hpp"

namespace wdk {

/// Thrown when a power-series expansion would need the inverse of a
/// factor (1 - m) with m of weight zero in the chosen grading.
class NonInvertibleFactor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// How a series is truncated: by total degree, or by the exponent of a
/// single variable (the z-degree of a (t1, t2, z) series).
struct Grading {
    std::optional<std::size_t> variable;

    static Grading total() { return {}; }
    static Grading by_variable(std::size_t index) { return {index}; }

    std::uint64_t weight(const Monomial &m) const { return variable ? m[*variable] : m.degree(); }
    friend bool operator==(const Grading &, const Grading &) = default;
};

/// Polynomial truncated at a fixed order of some grading.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t arity, std::uint64_t order, Grading grading = Grading::total());
    TruncatedSeries(const Polynomial &p, std::uint64_t order, Grading grading = Grading::total());

    std::size_t arity() const { return terms_.arity(); }
    std::uint64_t order() const { return order_; }
    const Grading &grading() const { return grading_; }
    const Polynomial &terms() const { return terms_; }
    Rational coefficient(const Monomial &m) const { return terms_.coefficient(m); }

    /// Slice of all terms of grading weight exactly n.
    Polynomial slice(std::uint64_t n) const;

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    /// Re-truncates at a lower order.
    TruncatedSeries truncated(std::uint64_t order) const;

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
        return a.order_ == b.order_ && a.grading_ == b.grading_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const TruncatedSeries &o) const;

    Polynomial terms_;
    std::uint64_t order_;
    Grading grading_;
};

/// Keeps terms of grading weight <= order.
Polynomial truncate(const Polynomial &p, std::uint64_t order, const Grading &grading);

/// numerator / prod (1 - m)^k. Denominator monomials are never the unit monomial.
class NiceRational {
public:
    using Denominator = std::map<Monomial, unsigned, GrlexLess>;

    NiceRational() = default;
    explicit NiceRational(Polynomial numerator) : numerator_(std::move(numerator)) {}
    NiceRational(Polynomial numerator, Denominator denominator);

    /// 1 / (1 - m).
    static NiceRational geometric(const Monomial &m);

    std::size_t arity() const { return numerator_.arity(); }
    const Polynomial &numerator() const { return numerator_; }
    const Denominator &denominator() const { return denominator_; }
    /// prod (1 - m)^k expanded.
    Polynomial denominator_polynomial() const;

    NiceRational operator-() const { return {-numerator_, denominator_}; }
    friend NiceRational operator+(const NiceRational &a, const NiceRational &b);
    friend NiceRational operator-(const NiceRational &a, const NiceRational &b);
    friend NiceRational operator*(const NiceRational &a, const NiceRational &b);
    friend NiceRational operator*(const NiceRational &a, const Polynomial &p);

    /// Equality of the represented functions, by cross-multiplication.
    friend bool operator==(const NiceRational &a, const NiceRational &b);

    /// Substitutes monomial images x_i -> images[i]; denominators stay factored.
    /// Throws NonInvertibleFactor if a factor collapses to (1 - 1).
    NiceRational substitute(std::span<const Monomial> images) const;

    /// Divides the numerator by a monomial; throws std::domain_error if inexact.
    NiceRational divided_by(const Monomial &m) const;

    /// Cancels denominator factors that divide the numerator exactly.
    NiceRational reduced() const;

    TruncatedSeries expand(std::uint64_t order, Grading grading = Grading::total()) const;

    std::string to_string(std::span<const std::string> names = {}) const;

private:
    Polynomial numerator_;
    Denominator denominator_;
};

enum class NiceOp { add, sub, mul };

NiceRational nice_arith(const NiceRational &a, const NiceRational &b, NiceOp op);

inline TruncatedSeries nice_expand(const NiceRational &f, std::uint64_t order,
                                   Grading grading = Grading::total()) {
    return f.expand(order, grading);
}

} // namespace wdk

#endif // WDK_NICE_RATIONAL_HPP
