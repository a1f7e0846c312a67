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

#include "wdk/linalg.hpp"

#include <algorithm>

namespace wdk::linalg {

IntVector to_integer(const RatVector &v) {
    mpz_class l = 1;
    for (const auto &[c, x] : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto &[c, x] : v)
        if (!x.is_zero())
            out.emplace_back(c, x.numerator() * (l / x.denominator()));
    return out;
}

RatVector to_rational(const IntVector &v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto &[c, x] : v)
        out.emplace_back(c, Rational(x));
    return out;
}

IntVector primitive(IntVector v) {
    if (v.empty())
        return v;
    mpz_class g = 0;
    for (const auto &[c, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    if (sgn(v.front().second) < 0)
        g = -g;
    if (g != 1)
        for (auto &[c, x] : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector combine(const mpz_class &a, const IntVector &x, const mpz_class &b, const IntVector &y) {
    IntVector out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, b * iy->second);
            ++iy;
        } else {
            mpz_class s = a * ix->second + b * iy->second;
            if (s != 0)
                out.emplace_back(ix->first, std::move(s));
            ++ix;
            ++iy;
        }
    }
    return out;
}

namespace {

/// Eliminates column `col` of v using `row` whose pivot sits at `col`.
IntVector eliminate(const IntVector &v, const mpz_class &entry, const IntVector &row) {
    const mpz_class &pivot = row.front().second;
    mpz_class g = gcd(pivot, entry);
    return primitive(combine(pivot / g, v, -(entry / g), row));
}

} // namespace

IntVector EchelonBasis::reduce(IntVector v) const {
    if (rows_.empty() || v.empty())
        return v;
    std::size_t i = 0;
    while (i < v.size()) {
        const std::size_t col = v[i].first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        // Entries before position i are untouched by the elimination because
        // the pivot row only has columns >= col.
        const mpz_class entry = v[i].second;
        v = eliminate(v, entry, it->second);
        // Restart the scan at the first column > col.
        i = static_cast<std::size_t>(
            std::lower_bound(v.begin(), v.end(), col + 1,
                             [](const auto &e, std::size_t c) { return e.first < c; }) -
            v.begin());
    }
    return v;
}

bool EchelonBasis::insert(IntVector v) {
    v = primitive(reduce(std::move(v)));
    if (v.empty())
        return false;
    const std::size_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<IntVector> reduced_echelon(const std::vector<IntVector> &input) {
    EchelonBasis basis;
    for (const auto &r : input)
        basis.insert(r);
    std::vector<IntVector> rows;
    rows.reserve(basis.rank());
    for (const auto &[p, r] : basis.rows())
        rows.push_back(r);
    // Back substitution, from the last pivot upwards.
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t pivot_col = rows[k].front().first;
        for (std::size_t i = 0; i < k; ++i) {
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pivot_col,
                                       [](const auto &e, std::size_t c) { return e.first < c; });
            if (it == rows[i].end() || it->first != pivot_col)
                continue;
            const mpz_class entry = it->second;
            rows[i] = eliminate(rows[i], entry, rows[k]);
        }
    }
    return rows;
}

std::vector<IntVector> nullspace_of_columns(const std::vector<IntVector> &columns) {
    const std::size_t n = columns.size();
    // Transpose: one row of the matrix per coordinate that occurs.
    std::map<std::size_t, IntVector> by_row;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto &[r, x] : columns[j])
            by_row[r].emplace_back(j, x);
    std::vector<IntVector> rows;
    rows.reserve(by_row.size());
    for (auto &[r, row] : by_row)
        rows.push_back(std::move(row));

    const auto rref = reduced_echelon(rows);
    std::vector<bool> is_pivot(n, false);
    for (const auto &r : rref)
        is_pivot[r.front().first] = true;

    std::vector<IntVector> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v;
        for (const auto &r : rref) {
            auto it = std::lower_bound(r.begin(), r.end(), f,
                                       [](const auto &e, std::size_t c) { return e.first < c; });
            if (it != r.end() && it->first == f)
                v.emplace_back(r.front().first, -Rational(it->second) / Rational(r.front().second));
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        kernel.push_back(primitive(to_integer(v)));
    }
    return reduced_echelon(kernel);
}

std::size_t rank(const std::vector<IntVector> &vectors) {
    EchelonBasis basis;
    for (const auto &v : vectors)
        basis.insert(v);
    return basis.rank();
}

} // namespace wdk::linalg
