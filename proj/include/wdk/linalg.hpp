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

#ifndef WDK_LINALG_HPP
#define WDK_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wdk/rational.hpp"

namespace wdk::linalg {

/// Sparse integer vector: (column, value) pairs, strictly increasing columns,
/// no zero values.
using IntVector = std::vector<std::pair<std::size_t, mpz_class>>;

/// Sparse rational vector with the same layout.
using RatVector = std::vector<std::pair<std::size_t, Rational>>;

/// Clears denominators.
IntVector to_integer(const RatVector &v);
RatVector to_rational(const IntVector &v);

/// Divides by the gcd of the entries and makes the first entry positive.
IntVector primitive(IntVector v);

/// a*x + b*y.
IntVector combine(const mpz_class &a, const IntVector &x, const mpz_class &b, const IntVector &y);

/// Incremental row-echelon basis of a subspace of Q^n, kept as primitive
/// integer rows keyed by pivot (first nonzero) column. All elimination is
/// fraction-free.
class EchelonBasis {
public:
    /// Reduces v against the stored rows; the result is zero iff v lies in the span.
    IntVector reduce(IntVector v) const;
    /// Adds v; returns true when the rank grows.
    bool insert(IntVector v);
    bool contains(const IntVector &v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, IntVector> &rows() const { return rows_; }

private:
    std::map<std::size_t, IntVector> rows_;
};

/// Reduced row echelon form of the span of `rows`, each row primitive with a
/// positive pivot, ordered by pivot column.
std::vector<IntVector> reduced_echelon(const std::vector<IntVector> &rows);

/// Basis of { v : sum_j v_j * columns[j] = 0 }, in reduced echelon form
/// (pivot = first nonzero coordinate), rows primitive with positive pivot.
std::vector<IntVector> nullspace_of_columns(const std::vector<IntVector> &columns);

/// Rank of the span of the given vectors.
std::size_t rank(const std::vector<IntVector> &vectors);

} // namespace wdk::linalg

#endif // WDK_LINALG_HPP
