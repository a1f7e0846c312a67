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
#include "wdk/omega.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wdk {

std::vector<std::string> series_names() { return {"t1", "t2", "z"}; }

namespace {

Polynomial linear_sum(std::size_t d) {
    Polynomial s(d);
    for (std::size_t j = 0; j < d; ++j)
        s.add_term(Monomial::variable(d, j), Rational(1));
    return s;
}

NiceRational::Denominator all_variables(std::size_t d) {
    NiceRational::Denominator den;
    for (std::size_t j = 0; j < d; ++j)
        den.emplace(Monomial::variable(d, j), 1U);
    return den;
}

} // namespace

NiceRational hilbert_free_metabelian(std::size_t d, bool commutator_only) {
    if (d < 2)
        throw std::invalid_argument("hilbert_free_metabelian: need d >= 2");
    const Polynomial s = linear_sum(d);
    NiceRational tail(s - Polynomial(d, Rational(1)), all_variables(d));
    Polynomial head(d, Rational(1));
    if (!commutator_only)
        head += s;
    return NiceRational(head) + tail;
}

NiceRational hilbert_polynomial_ring(std::size_t d) {
    if (d < 1)
        throw std::invalid_argument("hilbert_polynomial_ring: need d >= 1");
    return NiceRational(Polynomial(d, Rational(1)), all_variables(d));
}

std::vector<Monomial> gl2_images(const Partition &partition) {
    std::vector<Monomial> images;
    images.reserve(partition.arity());
    for (std::size_t j = 0; j < partition.arity(); ++j) {
        const auto b = partition.bidegree_of(j);
        images.push_back(Monomial{b.first, b.second, 1});
    }
    return images;
}

NiceRational gl2_substitute(const NiceRational &h, const Partition &partition) {
    if (h.arity() != partition.arity())
        throw ArityMismatch("gl2_substitute: series has " + std::to_string(h.arity()) + " variables, partition " +
                            partition.to_string() + " needs " + std::to_string(partition.arity()));
    return h.substitute(gl2_images(partition));
}

NiceRational specialize_t(const NiceRational &f) {
    const std::vector<Monomial> images{Monomial{0}, Monomial{0}, Monomial{1}};
    return f.substitute(images);
}

Polynomial specialize_t(const Polynomial &p) {
    const std::vector<Polynomial> images{Polynomial(1, Rational(1)), Polynomial(1, Rational(1)),
                                         Polynomial::variable(1, 0)};
    return substitute(p, images);
}

// ---------------------------------------------------------------------------
// Schur functions in two variables

Polynomial schur_polynomial(Bidegree lambda) {
    if (lambda.first < lambda.second)
        throw std::invalid_argument("schur_polynomial: need l1 >= l2");
    Polynomial s(2);
    const unsigned total = lambda.first + lambda.second;
    for (unsigned k = lambda.second; k <= lambda.first; ++k)
        s.add_term(Monomial{k, total - k}, Rational(1));
    return s;
}

std::vector<std::pair<Bidegree, Rational>> schur_decompose(const Polynomial &p) {
    if (p.arity() != 2)
        throw ArityMismatch("schur_decompose: expects a polynomial in t1, t2");
    for (const auto &[m, c] : p.terms())
        if (p.coefficient(Monomial{m[1], m[0]}) != c)
            throw NotSymmetric("schur_decompose: input is not symmetric in t1, t2");
    // m(l1, l2) can be nonzero where the t1^l1 t2^l2 coefficient vanishes but
    // its neighbour t1^(l1+1) t2^(l2-1) does not.
    std::set<Bidegree> candidates;
    for (const auto &[m, c] : p.terms()) {
        if (m[0] < m[1])
            continue;
        candidates.insert({m[0], m[1]});
        if (m[0] >= m[1] + 2)
            candidates.insert({m[0] - 1, m[1] + 1});
    }
    std::vector<std::pair<Bidegree, Rational>> out;
    for (const auto &lambda : candidates) {
        Rational mult = p.coefficient(Monomial{lambda.first, lambda.second});
        if (lambda.second > 0)
            mult -= p.coefficient(Monomial{lambda.first + 1, lambda.second - 1});
        if (!mult.is_zero())
            out.emplace_back(lambda, mult);
    }
    return out;
}

TruncatedSeries multiplicity_series_truncated(const NiceRational &h, std::uint64_t order) {
    if (h.arity() != 3)
        throw ArityMismatch("multiplicity_series_truncated: expects a series in t1, t2, z");
    const TruncatedSeries full = h.expand(order, z_grading());
    // Split the expansion into z-slices, each a polynomial in t1, t2.
    std::map<std::uint64_t, Polynomial> slices;
    for (const auto &[m, c] : full.terms().terms()) {
        auto it = slices.try_emplace(m[kZ], 2).first;
        it->second.add_term(Monomial{m[kT1], m[kT2]}, c);
    }
    Polynomial result(3);
    for (const auto &[n, slice] : slices)
        for (const auto &[lambda, mult] : schur_decompose(slice))
            result.add_term(Monomial{lambda.first, lambda.second, static_cast<Exponent>(n)}, mult);
    return TruncatedSeries(result, order, z_grading());
}

// ---------------------------------------------------------------------------
// Laurent series in xi

bool XiFactorLess::operator()(const XiFactor &a, const XiFactor &b) const {
    if (a.exponent != b.exponent)
        return a.exponent < b.exponent;
    return GrlexLess{}(a.monomial, b.monomial);
}

bool XiLaurent::DenominatorLess::operator()(const Denominator &a, const Denominator &b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto &x, const auto &y) {
        if (XiFactorLess{}(x.first, y.first))
            return true;
        if (XiFactorLess{}(y.first, x.first))
            return false;
        return x.second < y.second;
    });
}

namespace {

int xi_weight(const Monomial &m, std::span<const int> weights) {
    int w = 0;
    for (std::size_t i = 0; i < m.arity(); ++i)
        w += weights[i] * static_cast<int>(m[i]);
    return w;
}

} // namespace

XiLaurent XiLaurent::from_nice(const NiceRational &f, std::span<const int> weights) {
    if (weights.size() != f.arity())
        throw ArityMismatch("XiLaurent::from_nice: need one xi-weight per variable");
    XiLaurent out(f.arity());
    Denominator den;
    for (const auto &[m, k] : f.denominator())
        den.emplace(XiFactor{m, xi_weight(m, weights)}, k);
    Numerator num;
    for (const auto &[m, c] : f.numerator().terms()) {
        auto it = num.try_emplace(xi_weight(m, weights), f.arity()).first;
        it->second.add_term(m, c);
    }
    out.add(den, num);
    return out;
}

void XiLaurent::add(const Denominator &den, int xi_power, const Polynomial &coefficient) {
    if (coefficient.is_zero())
        return;
    auto &num = terms_[den];
    auto it = num.try_emplace(xi_power, arity_).first;
    it->second += coefficient;
    if (it->second.is_zero())
        num.erase(it);
    if (num.empty())
        terms_.erase(den);
}

void XiLaurent::add(const Denominator &den, const Numerator &num) {
    for (const auto &[k, c] : num)
        add(den, k, c);
}

NiceRational XiLaurent::at_xi_one() const {
    NiceRational sum{Polynomial(arity_)};
    for (const auto &[den, num] : terms_) {
        Polynomial n(arity_);
        for (const auto &[k, c] : num)
            n += c;
        NiceRational::Denominator d;
        for (const auto &[f, k] : den)
            d[f.monomial] += k;
        sum = sum + NiceRational(std::move(n), std::move(d));
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Elliott reduction

namespace {

using Den = XiLaurent::Denominator;
using Num = XiLaurent::Numerator;

void remove_one(Den &den, const XiFactor &f) {
    auto it = den.find(f);
    if (--it->second == 0)
        den.erase(it);
}

Num shifted(const Num &num, const Monomial &m, int xi_power) {
    Num out;
    for (const auto &[k, c] : num)
        out.emplace(k + xi_power, c.mul_monomial(m));
    return out;
}

/// Factors repeated by multiplicity, for the finite enumerations below.
std::vector<XiFactor> flatten(const Den &den) {
    std::vector<XiFactor> out;
    for (const auto &[f, k] : den)
        for (unsigned r = 0; r < k; ++r)
            out.push_back(f);
    return out;
}

/// sum of prod m_i^(n_i) over n >= 0 with sum |e_i| n_i <= bound.
void bounded_sum(const std::vector<XiFactor> &factors, std::size_t index, int bound, const Monomial &current,
                 Polynomial &out) {
    if (index == factors.size()) {
        out.add_term(current, Rational(1));
        return;
    }
    const int step = std::abs(factors[index].exponent);
    Monomial m = current;
    for (int used = 0; used <= bound; used += step) {
        bounded_sum(factors, index + 1, bound - used, m, out);
        m *= factors[index].monomial;
    }
}

} // namespace

NiceRational omega_nonneg(const XiLaurent &f, std::size_t max_steps) {
    const std::size_t arity = f.arity();
    XiLaurent pending = f;
    XiLaurent done(arity);
    std::size_t steps = 0;
    while (!pending.terms().empty()) {
        auto node = pending.terms().begin();
        const Den den = node->first;
        const Num num = node->second;
        pending.add(den, [&] {
            Num neg;
            for (const auto &[k, c] : num)
                neg.emplace(k, -c);
            return neg;
        }());

        const XiFactor *pos = nullptr;
        const XiFactor *neg = nullptr;
        for (const auto &[fac, k] : den) {
            if (fac.exponent > 0 && (!pos || fac.exponent > pos->exponent))
                pos = &fac;
            if (fac.exponent < 0 && (!neg || fac.exponent < neg->exponent))
                neg = &fac;
        }
        if (!pos || !neg) {
            done.add(den, num);
            continue;
        }
        if (++steps > max_steps)
            throw OmegaFailure("omega_nonneg: Elliott reduction exceeded its step budget");

        const XiFactor a = *pos;
        const XiFactor b = *neg;
        const int e = a.exponent;
        const int g = -b.exponent;
        const XiFactor c{a.monomial * b.monomial, e - g};
        Den base = den;
        remove_one(base, a);
        remove_one(base, b);
        Den with_a = base;
        with_a[a] += 1;
        with_a[c] += 1;
        Den with_b = base;
        with_b[b] += 1;
        with_b[c] += 1;
        if (e >= g) {
            // 1/((1-A)(1-B)) = 1/(1-AB) [1/(1-A) + B/(1-B)]
            pending.add(with_a, num);
            pending.add(with_b, shifted(num, b.monomial, b.exponent));
        } else {
            // 1/((1-A)(1-B)) = 1/(1-AB) [A/(1-A) + 1/(1-B)]
            pending.add(with_a, shifted(num, a.monomial, a.exponent));
            pending.add(with_b, num);
        }
    }

    // Terms left have xi-factors of one sign only.
    std::vector<std::pair<NiceRational::Denominator, Polynomial>> pieces;
    for (const auto &[den, num] : done.terms()) {
        Den signed_part;
        NiceRational::Denominator free_part;
        bool positive = false;
        for (const auto &[fac, k] : den) {
            if (fac.exponent == 0) {
                free_part[fac.monomial] += k;
            } else {
                positive = fac.exponent > 0;
                signed_part.emplace(fac, k);
            }
        }
        const auto flat = flatten(signed_part);
        for (const auto &[k, coeff] : num) {
            if (signed_part.empty()) {
                if (k >= 0)
                    pieces.emplace_back(free_part, coeff);
            } else if (positive) {
                NiceRational::Denominator full = free_part;
                for (const auto &fac : flat)
                    full[fac.monomial] += 1;
                pieces.emplace_back(full, coeff);
                if (k < 0) {
                    // Remove the xi^j terms with j < 0 from xi^k / prod(1 - A xi^e).
                    Polynomial low(arity);
                    bounded_sum(flat, 0, -k - 1, Monomial(arity), low);
                    pieces.emplace_back(free_part, -(coeff * low));
                }
            } else if (k >= 0) {
                Polynomial kept(arity);
                bounded_sum(flat, 0, k, Monomial(arity), kept);
                pieces.emplace_back(free_part, coeff * kept);
            }
        }
    }

    // Sum pieces sharing a denominator first, then pool.
    std::map<NiceRational::Denominator, Polynomial,
             decltype([](const NiceRational::Denominator &x, const NiceRational::Denominator &y) {
                 return std::lexicographical_compare(
                     x.begin(), x.end(), y.begin(), y.end(), [](const auto &p, const auto &q) {
                         if (GrlexLess{}(p.first, q.first))
                             return true;
                         if (GrlexLess{}(q.first, p.first))
                             return false;
                         return p.second < q.second;
                     });
             })>
        grouped;
    for (auto &[den, poly] : pieces) {
        auto it = grouped.try_emplace(den, arity).first;
        it->second += poly;
    }
    NiceRational sum{Polynomial(arity)};
    for (auto &[den, poly] : grouped)
        if (!poly.is_zero())
            sum = sum + NiceRational(poly, den).reduced();
    return sum.reduced();
}

// ---------------------------------------------------------------------------
// Multiplicity series in closed form

namespace {

std::uint64_t z_degree(const NiceRational::Denominator &den) {
    std::uint64_t total = 0;
    for (const auto &[m, k] : den)
        total += static_cast<std::uint64_t>(m[kZ]) * k;
    return total;
}

/// Denominator guess from the factors of f(t1 xi, t2 / xi, z): every positive
/// factor at xi = 1, every xi-free factor, and for each pair of opposite
/// signs the product that cancels xi.
NiceRational::Denominator candidate_denominator(const XiLaurent &f) {
    NiceRational::Denominator out;
    for (const auto &[den, num] : f.terms()) {
        for (const auto &[a, ka] : den) {
            if (a.exponent >= 0) {
                auto &slot = out[a.monomial];
                slot = std::max(slot, ka);
            }
            if (a.exponent <= 0)
                continue;
            for (const auto &[b, kb] : den) {
                if (b.exponent >= 0)
                    continue;
                const int e = a.exponent;
                const int g = -b.exponent;
                const int h = std::gcd(e, g);
                Monomial m = a.monomial.pow(static_cast<Exponent>(g / h)) * b.monomial.pow(static_cast<Exponent>(e / h));
                auto &slot = out[m];
                slot = std::max(slot, ka + kb - 1);
            }
        }
    }
    return out;
}

} // namespace

std::optional<NiceRational> reconstruct_with_denominator(const NiceRational &h, const NiceRational::Denominator &den,
                                                         std::uint64_t order) {
    const Polynomial dpoly = NiceRational(Polynomial(3, Rational(1)), den).denominator_polynomial();
    // The numerator of the closed form has z-degree at most `order`; a
    // second truncation, higher by the z-degree of the denominator, must
    // produce no further terms.
    const std::uint64_t high = order + z_degree(den) + 2;
    const TruncatedSeries series = multiplicity_series_truncated(h, high);
    const Polynomial product = truncate(series.terms() * dpoly, high, z_grading());
    Polynomial numerator(3);
    for (const auto &[m, c] : product.terms()) {
        if (m[kZ] > order)
            return std::nullopt;
        numerator.add_term(m, c);
    }
    return NiceRational(numerator, den).reduced();
}

ClosedForm multiplicity_series_closed_with_method(const NiceRational &h) {
    if (h.arity() != 3)
        throw ArityMismatch("multiplicity_series_closed: expects a series in t1, t2, z");
    const Polynomial t1_minus_t2 = Polynomial::variable(3, kT1) - Polynomial::variable(3, kT2);
    const NiceRational f = h * t1_minus_t2;
    const std::vector<int> weights{1, -1, 0};
    const XiLaurent laurent = XiLaurent::from_nice(f, weights);
    try {
        const NiceRational omega = omega_nonneg(laurent);
        return {omega.divided_by(Monomial{1, 0, 0}).reduced(), ClosedFormMethod::elliott};
    } catch (const OmegaFailure &) {
    } catch (const std::domain_error &) {
    }
    const auto den = candidate_denominator(laurent);
    for (std::uint64_t order = 4; order <= 64; order *= 2)
        if (auto r = reconstruct_with_denominator(h, den, order))
            return {*r, ClosedFormMethod::reconstruction};
    throw OmegaFailure("multiplicity_series_closed: Elliott reduction and reconstruction both failed");
}

} // namespace wdk
