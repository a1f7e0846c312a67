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

// Weitzenboeck derivations delta(p_1, ..., p_s): nilpotent linear maps on
// span(x_1..x_d) in Jordan form, extended to polynomials, wreath elements
// and Lie elements.

#ifndef WDK_WEITZENBOCK_HPP
#define WDK_WEITZENBOCK_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wdk/metabelian.hpp"
#include "wdk/partition.hpp"
#include "wdk/polynomial.hpp"

namespace wdk {

/// Inside every cell x_j..x_{j+p}: delta(x_j) = 0, delta(x_{j+k}) = x_{j+k-1}.
class Derivation {
public:
    explicit Derivation(Partition partition);
    static Derivation from_partition(const Partition &partition) { return Derivation(partition); }

    const Partition &partition() const { return partition_; }
    std::size_t arity() const { return partition_.arity(); }

    /// alpha with delta(x_j) = sum_i alpha(i, j) x_i.
    std::vector<std::vector<Rational>> matrix() const;
    /// The index i with delta(x_j) = x_i, or nothing for a cell head.
    std::optional<std::size_t> image_index(std::size_t j) const { return image_[j]; }

    Polynomial apply(const Polynomial &p) const;
    WreathElement apply(const WreathElement &u) const;
    /// Leibniz rule on left-normed words, then normal-form rewriting.
    LieElement apply(const LieElement &e) const;

    /// Bidegree (p - k, k) of the variable at offset k of a cell of size p + 1.
    std::vector<Bidegree> bidegree_assignment() const;
    /// Bidegree of a monomial (sum over its variables).
    Bidegree bidegree(const Monomial &m) const;

    /// True when alpha^d = 0.
    bool is_nilpotent() const;

    /// exp(delta)(p) = sum_k delta^k(p) / k!, a finite sum.
    Polynomial exp_apply(const Polynomial &p) const;

private:
    void check_arity(std::size_t arity) const;

    Partition partition_;
    std::vector<std::optional<std::size_t>> image_;
};

} // namespace wdk

#endif // WDK_WEITZENBOCK_HPP
