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
// Hilbert series of free metabelian Lie algebras and the multiplicity series
// of their GL_2-module structure. Series in (t1, t2, z) use variable indices
// 0, 1, 2 and are truncated by z-degree.

#ifndef WDK_OMEGA_HPP
#define WDK_OMEGA_HPP

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wdk/nice_rational.hpp"
#include "wdk/partition.hpp"

namespace wdk {

inline constexpr std::size_t kT1 = 0;
inline constexpr std::size_t kT2 = 1;
inline constexpr std::size_t kZ = 2;

inline Grading z_grading() { return Grading::by_variable(kZ); }
/// Names "t1", "t2", "z" for rendering.
std::vector<std::string> series_names();

/// 1 + (z_1+...+z_d) + (z_1+...+z_d - 1) prod 1/(1 - z_j). With
/// commutator_only the summand z_1+...+z_d is removed, which leaves the
/// series of the commutator ideal.
NiceRational hilbert_free_metabelian(std::size_t d, bool commutator_only = false);
/// prod 1/(1 - z_j).
NiceRational hilbert_polynomial_ring(std::size_t d);

/// Images t1^(p-k) t2^k z of the variables of each cell.
std::vector<Monomial> gl2_images(const Partition &partition);
/// Throws ArityMismatch when H does not have partition.arity() variables.
NiceRational gl2_substitute(const NiceRational &h, const Partition &partition);

/// Sets t1 = t2 = 1 in a (t1, t2, z) function; the result has one variable.
NiceRational specialize_t(const NiceRational &f);
Polynomial specialize_t(const Polynomial &p);

class NotSymmetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Schur polynomial S_(l1,l2) = sum_{k=l2}^{l1} t1^k t2^(l1+l2-k), two variables.
Polynomial schur_polynomial(Bidegree lambda);

/// Multiplicities of P = sum m(lambda) S_lambda for symmetric P in (t1, t2).
/// Throws NotSymmetric.
std::vector<std::pair<Bidegree, Rational>> schur_decompose(const Polynomial &p);

/// z^n coefficient of the result: sum m(l1, l2, n) t1^l1 t2^l2, from the
/// Schur decomposition of the z^n slice of H, for n <= order.
TruncatedSeries multiplicity_series_truncated(const NiceRational &h, std::uint64_t order);

/// (1 - m xi^e).
struct XiFactor {
    Monomial monomial;
    int exponent = 0;
};

struct XiFactorLess {
    bool operator()(const XiFactor &a, const XiFactor &b) const;
};

/// Sum of terms N(xi) / prod (1 - m xi^e), numerators Laurent in xi with
/// polynomial coefficients.
class XiLaurent {
public:
    using Denominator = std::map<XiFactor, unsigned, XiFactorLess>;
    using Numerator = std::map<int, Polynomial>;
    struct DenominatorLess {
        bool operator()(const Denominator &a, const Denominator &b) const;
    };
    using TermMap = std::map<Denominator, Numerator, DenominatorLess>;

    explicit XiLaurent(std::size_t arity) : arity_(arity) {}

    /// f with every variable x_i replaced by x_i xi^(weights[i]).
    static XiLaurent from_nice(const NiceRational &f, std::span<const int> weights);

    std::size_t arity() const { return arity_; }
    const TermMap &terms() const { return terms_; }
    void add(const Denominator &den, int xi_power, const Polynomial &coefficient);
    void add(const Denominator &den, const Numerator &num);

    /// The function at xi = 1. Throws NonInvertibleFactor if a factor collapses.
    NiceRational at_xi_one() const;

private:
    std::size_t arity_;
    TermMap terms_;
};

class OmegaFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sum of the xi^k parts with k >= 0, at xi = 1, by Elliott reduction.
/// Throws OmegaFailure when the step budget runs out.
NiceRational omega_nonneg(const XiLaurent &f, std::size_t max_steps = 2000000);

enum class ClosedFormMethod { elliott, reconstruction };

struct ClosedForm {
    NiceRational value;
    ClosedFormMethod method = ClosedFormMethod::elliott;
};

/// Finds numerator N with N / D equal to the truncated series, checked at a
/// second, higher order. Returns nothing when no polynomial numerator fits.
std::optional<NiceRational> reconstruct_with_denominator(const NiceRational &h, const NiceRational::Denominator &den,
                                                         std::uint64_t order);

/// (1/t1) * Omega_{>=} of (t1 - t2) H(t1 xi, t2 / xi, z). Falls back to
/// reconstruction from the truncated series; throws OmegaFailure if both fail.
ClosedForm multiplicity_series_closed_with_method(const NiceRational &h);
inline NiceRational multiplicity_series_closed(const NiceRational &h) {
    return multiplicity_series_closed_with_method(h).value;
}

} // namespace wdk

#endif // WDK_OMEGA_HPP
