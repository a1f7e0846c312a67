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
// Constants of a Weitzenboeck derivation: homogeneous kernels, generators of
// the polynomial invariants, module generators of the commutator-ideal
// constants with their relations, and the pi lifting for a trailing 1x1 cell.
//
// Every computation is split along a grading finer than the bidegree: the
// degree in each Jordan cell together with the total offset weight. The
// derivation preserves the cell degrees and lowers the weight by one.

#ifndef WDK_CONSTANTS_HPP
#define WDK_CONSTANTS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wdk/linalg.hpp"
#include "wdk/metabelian.hpp"
#include "wdk/partition.hpp"
#include "wdk/polynomial.hpp"
#include "wdk/weitzenbock.hpp"

namespace wdk {

enum class Space { polynomial, commutator, whole_lie };

/// "poly", "commutator", "lie".
std::optional<Space> parse_space(std::string_view text);
std::string to_string(Space space);

struct SliceKey {
    std::vector<unsigned> cell_degrees;
    unsigned weight = 0;

    std::size_t degree() const;
    SliceKey operator+(const SliceKey &o) const;
    /// Componentwise difference, or nothing if some component goes negative.
    std::optional<SliceKey> minus(const SliceKey &o) const;
    friend auto operator<=>(const SliceKey &, const SliceKey &) = default;
    std::string to_string() const;
};

SliceKey slice_key_of(const Partition &partition, const Monomial &m);
/// Key shared by all terms; nothing when the input mixes slices or is zero.
std::optional<SliceKey> slice_key_of(const Partition &partition, const Polynomial &p);
std::optional<SliceKey> slice_key_of(const Partition &partition, const LieElement &e);
/// (sum p_i n_i - w, w).
Bidegree bidegree_of(const Partition &partition, const SliceKey &key);

/// Multidegrees of total degree n grouped by slice.
std::map<SliceKey, std::vector<Monomial>> multidegrees_by_slice(const Partition &partition, std::size_t n);

struct PolynomialKernel {
    SliceKey key;
    std::vector<Monomial> coordinates;    // ascending canonical order
    std::vector<linalg::IntVector> basis; // reduced echelon form

    std::size_t dimension() const { return basis.size(); }
    Polynomial element(const linalg::IntVector &v) const;
    std::vector<Polynomial> elements() const;
    /// Coordinates of p; throws std::invalid_argument outside the slice.
    linalg::RatVector coordinates_of(const Polynomial &p) const;
};

struct CommutatorKernel {
    SliceKey key;
    std::vector<LieMonomial> coordinates; // ascending canonical order
    std::vector<linalg::IntVector> basis; // reduced echelon form

    std::size_t dimension() const { return basis.size(); }
    LieElement element(const linalg::IntVector &v) const;
    std::vector<LieElement> elements() const;
    linalg::RatVector coordinates_of(const LieElement &e) const;
};

PolynomialKernel polynomial_kernel(const Derivation &delta, const SliceKey &key);
CommutatorKernel commutator_kernel(const Derivation &delta, const SliceKey &key);

/// Kernel of delta on one homogeneous component.
struct KernelSlice {
    Space space = Space::polynomial;
    std::size_t degree = 0;
    std::optional<SliceKey> key; // set for single-slice selections
    std::vector<Polynomial> polynomials;
    std::vector<LieElement> lie_elements;
    std::vector<WreathElement> wreath_elements;

    std::size_t dimension() const { return space == Space::polynomial ? polynomials.size() : lie_elements.size(); }
};

/// Whole total-degree component (degree >= 1; >= 2 for the commutator space).
KernelSlice kernel_slice(const Derivation &delta, Space space, std::size_t degree);
KernelSlice kernel_slice(const Derivation &delta, Space space, const SliceKey &key);

/// dims[n - 1] = dim of the degree-n kernel, n = 1..max_degree.
std::vector<std::size_t> kernel_dimensions(const Derivation &delta, Space space, std::size_t max_degree);

/// (degree, bidegree) -> nonzero kernel dimension.
using BigradedDimensions = std::map<std::pair<std::size_t, Bidegree>, std::size_t>;
BigradedDimensions bigraded_kernel_dimensions(const Derivation &delta, Space space, std::size_t max_degree);

/// sum dims[n-1] z^n in one variable.
Polynomial graded_series(const std::vector<std::size_t> &dims);
/// sum dim t1^l1 t2^l2 z^n.
Polynomial bigraded_series(const BigradedDimensions &dims);

// ---------------------------------------------------------------------------
// Generators

struct ModuleGenerator {
    LieElement element;
    WreathElement wreath;
    SliceKey key;
    Bidegree bidegree;
    std::size_t degree = 0;
};

/// Throws std::invalid_argument when e is not homogeneous for the slice grading.
ModuleGenerator make_generator(const Partition &partition, const LieElement &e);

struct GeneratorSet {
    Partition partition;
    std::vector<Polynomial> algebra;
    std::vector<ModuleGenerator> module;
};

/// sum_j c_j u_j(f_1, ..., f_l); coefficients[j] is a polynomial in l variables.
struct Relation {
    std::vector<Polynomial> coefficients;
    std::size_t degree = 0;
    Bidegree bidegree;

    /// Parses "c1*f3 + c3*f2 - c4*f1^2" (linear in the c's). Throws
    /// std::invalid_argument on unknown names or nonlinear c-terms.
    static Relation parse(std::string_view text, std::size_t module_count, std::size_t algebra_count);
    std::string to_string() const;
};

/// The formal sum evaluated in wreath coordinates.
/// Throws std::invalid_argument when the relation references missing generators.
WreathElement evaluate_relation(const Relation &r, const GeneratorSet &gens);
bool verify_relation(const Relation &r, const GeneratorSet &gens);
/// Common slice of the formal products of r; nothing when they differ.
std::optional<SliceKey> relation_key(const Relation &r, const GeneratorSet &gens);
/// Sets degree and bidegree from relation_key; false when r is not homogeneous.
bool assign_grading(Relation &r, const GeneratorSet &gens);

/// Primitive integer multiple with the first term (ascending canonical order) positive.
Polynomial normalized(const Polynomial &p);
LieElement normalized(const LieElement &e);

/// Minimal homogeneous generators of the polynomial constants up to degree
/// max_degree (complete only up to that degree).
std::vector<Polynomial> invariant_generators(const Derivation &delta, std::size_t max_degree);

/// Known complete generator lists: cells (1), (2), (3), all-ones, each
/// optionally followed by 1x1 cells. Every entry is checked to be constant.
std::optional<std::vector<Polynomial>> builtin_invariants(const Partition &partition);

struct DiscoveryResult {
    GeneratorSet generators;
    std::vector<Relation> relations; // minimal relations up to the degree bound
};

/// Degree-by-degree discovery of module generators of the commutator-ideal
/// constants over the algebra generated by `algebra`, with minimal
/// relations. Throws std::invalid_argument if an algebra element is not a
/// homogeneous constant.
DiscoveryResult module_generators(const Derivation &delta, const std::vector<Polynomial> &algebra,
                                  std::size_t max_degree);

/// pi(x_j1 ... x_jn) = sum_k [x_d, x_jk] x_j1 ... ^x_jk ... x_jn for p in d - 1
/// variables with zero constant term.
WreathElement pi_map(const Polynomial &p, std::size_t d);

/// Generators for delta with a trailing 1x1 cell from generators for the
/// partition without that cell: old c's plus pi of the old f's; the algebra
/// gains x_d. Throws std::invalid_argument without a trailing 1x1 cell.
GeneratorSet lift_generators(const Derivation &delta, const GeneratorSet &lower);

/// Per-slice comparison of the module span with the kernel.
struct SliceSpan {
    SliceKey key;
    std::size_t kernel_dimension = 0;
    std::size_t span_rank = 0;
    bool products_constant = true;
};

struct SpanReport {
    std::vector<SliceSpan> slices;
    bool generates() const;
    /// First slice where the span falls short, if any.
    std::optional<SliceSpan> first_failure() const;
};

SpanReport check_generation(const Derivation &delta, const GeneratorSet &gens, std::size_t max_degree);

/// Polynomial p of a smaller arity viewed in `arity` variables.
Polynomial extend_arity(const Polynomial &p, std::size_t arity);

} // namespace wdk

#endif // WDK_CONSTANTS_HPP
