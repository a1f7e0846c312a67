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
#include "wdk/constants.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wdk/parallel.hpp"

namespace wdk {

using linalg::EchelonBasis;
using linalg::IntVector;
using linalg::RatVector;

std::optional<Space> parse_space(std::string_view text) {
    if (text == "poly" || text == "polynomial")
        return Space::polynomial;
    if (text == "commutator")
        return Space::commutator;
    if (text == "lie")
        return Space::whole_lie;
    return std::nullopt;
}

std::string to_string(Space space) {
    switch (space) {
    case Space::polynomial:
        return "poly";
    case Space::commutator:
        return "commutator";
    case Space::whole_lie:
        return "lie";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Slices

std::size_t SliceKey::degree() const {
    std::size_t n = 0;
    for (auto c : cell_degrees)
        n += c;
    return n;
}

SliceKey SliceKey::operator+(const SliceKey &o) const {
    if (o.cell_degrees.size() != cell_degrees.size())
        throw std::invalid_argument("SliceKey: cell count mismatch");
    SliceKey r = *this;
    for (std::size_t i = 0; i < r.cell_degrees.size(); ++i)
        r.cell_degrees[i] += o.cell_degrees[i];
    r.weight += o.weight;
    return r;
}

std::optional<SliceKey> SliceKey::minus(const SliceKey &o) const {
    if (o.cell_degrees.size() != cell_degrees.size())
        throw std::invalid_argument("SliceKey: cell count mismatch");
    SliceKey r = *this;
    for (std::size_t i = 0; i < r.cell_degrees.size(); ++i) {
        if (o.cell_degrees[i] > r.cell_degrees[i])
            return std::nullopt;
        r.cell_degrees[i] -= o.cell_degrees[i];
    }
    if (o.weight > r.weight)
        return std::nullopt;
    r.weight -= o.weight;
    return r;
}

std::string SliceKey::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < cell_degrees.size(); ++i)
        out += (i ? "," : "") + std::to_string(cell_degrees[i]);
    return out + "]w" + std::to_string(weight);
}

SliceKey slice_key_of(const Partition &partition, const Monomial &m) {
    if (m.arity() != partition.arity())
        throw ArityMismatch("slice_key_of: arity mismatch");
    SliceKey key{std::vector<unsigned>(partition.cell_count(), 0), 0};
    for (std::size_t j = 0; j < m.arity(); ++j) {
        key.cell_degrees[partition.cell_of(j)] += m[j];
        key.weight += partition.offset_of(j) * m[j];
    }
    return key;
}

std::optional<SliceKey> slice_key_of(const Partition &partition, const Polynomial &p) {
    std::optional<SliceKey> key;
    for (const auto &[m, c] : p.terms()) {
        auto k = slice_key_of(partition, m);
        if (key && *key != k)
            return std::nullopt;
        key = std::move(k);
    }
    return key;
}

std::optional<SliceKey> slice_key_of(const Partition &partition, const LieElement &e) {
    std::optional<SliceKey> key;
    auto merge = [&](const Monomial &m) {
        auto k = slice_key_of(partition, m);
        if (key && *key != k)
            return false;
        key = std::move(k);
        return true;
    };
    for (std::size_t j = 0; j < e.linear().size(); ++j)
        if (!e.linear()[j].is_zero() && !merge(Monomial::variable(e.arity(), j)))
            return std::nullopt;
    for (const auto &[m, c] : e.terms())
        if (!merge(m.multidegree()))
            return std::nullopt;
    return key;
}

Bidegree bidegree_of(const Partition &partition, const SliceKey &key) {
    unsigned top = 0;
    for (std::size_t i = 0; i < key.cell_degrees.size(); ++i)
        top += partition.cells()[i] * key.cell_degrees[i];
    return {top - key.weight, key.weight};
}

namespace {

void monomials_rec(const Partition &partition, const SliceKey &key, std::size_t var, std::vector<unsigned> &cell_left,
                   unsigned weight_left, Monomial &current, std::vector<Monomial> &out) {
    if (var == partition.arity()) {
        if (weight_left == 0)
            out.push_back(current);
        return;
    }
    const std::size_t cell = partition.cell_of(var);
    const unsigned offset = partition.offset_of(var);
    const bool last_in_cell = offset == partition.cells()[cell];
    const unsigned lo = last_in_cell ? cell_left[cell] : 0;
    for (unsigned e = lo; e <= cell_left[cell]; ++e) {
        if (offset * e > weight_left)
            break;
        current.set(var, e);
        cell_left[cell] -= e;
        monomials_rec(partition, key, var + 1, cell_left, weight_left - offset * e, current, out);
        cell_left[cell] += e;
    }
    current.set(var, 0);
}

/// Monomials of one slice, ascending.
std::vector<Monomial> monomials_in_slice(const Partition &partition, const SliceKey &key) {
    std::vector<Monomial> out;
    std::vector<unsigned> left = key.cell_degrees;
    Monomial current(partition.arity());
    monomials_rec(partition, key, 0, left, key.weight, current, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

void compositions(std::size_t parts, std::size_t n, std::vector<unsigned> &current, std::vector<std::vector<unsigned>> &out) {
    if (current.size() + 1 == parts) {
        current.push_back(static_cast<unsigned>(n));
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        current.push_back(static_cast<unsigned>(k));
        compositions(parts, n - k, current, out);
        current.pop_back();
    }
}

/// All slice keys of total degree n.
std::vector<SliceKey> slice_keys(const Partition &partition, std::size_t n) {
    std::vector<std::vector<unsigned>> cds;
    std::vector<unsigned> current;
    compositions(partition.cell_count(), n, current, cds);
    std::vector<SliceKey> keys;
    for (auto &cd : cds) {
        unsigned top = 0;
        for (std::size_t i = 0; i < cd.size(); ++i)
            top += partition.cells()[i] * cd[i];
        for (unsigned w = 0; w <= top; ++w)
            keys.push_back(SliceKey{cd, w});
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<LieMonomial> lie_coordinates(const Partition &partition, const SliceKey &key) {
    std::vector<LieMonomial> out;
    if (key.degree() < 2)
        return out;
    for (const auto &alpha : monomials_in_slice(partition, key)) {
        auto part = basis_slice(alpha);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class as_integer(const Rational &r) {
    if (!r.is_integer())
        throw std::logic_error("expected an integer coefficient");
    return r.numerator();
}

struct PairLess {
    bool operator()(const std::pair<std::size_t, Monomial> &a, const std::pair<std::size_t, Monomial> &b) const {
        if (a.first != b.first)
            return a.first < b.first;
        return GrlexLess{}(a.second, b.second);
    }
};

/// Columns of delta restricted to a polynomial slice.
std::vector<IntVector> polynomial_columns(const Derivation &delta, const std::vector<Monomial> &coords) {
    std::map<Monomial, std::size_t, GrlexLess> index;
    std::vector<IntVector> columns;
    columns.reserve(coords.size());
    for (const auto &m : coords) {
        const Polynomial image = delta.apply(Polynomial(m));
        IntVector col;
        for (const auto &[t, c] : image.terms()) {
            auto it = index.try_emplace(t, index.size()).first;
            col.emplace_back(it->second, as_integer(c));
        }
        std::sort(col.begin(), col.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        columns.push_back(std::move(col));
    }
    return columns;
}

/// Columns of delta restricted to a commutator slice, in wreath coordinates.
std::vector<IntVector> commutator_columns(const Derivation &delta, const std::vector<LieMonomial> &coords) {
    std::map<std::pair<std::size_t, Monomial>, std::size_t, PairLess> index;
    std::vector<IntVector> columns;
    columns.reserve(coords.size());
    for (const auto &m : coords) {
        const WreathElement image = delta.apply(embed(LieElement::monomial(m)));
        IntVector col;
        for (std::size_t i = 0; i < image.arity(); ++i)
            for (const auto &[t, c] : image.a()[i].terms()) {
                auto it = index.try_emplace({i, t}, index.size()).first;
                col.emplace_back(it->second, as_integer(c));
            }
        std::sort(col.begin(), col.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        columns.push_back(std::move(col));
    }
    return columns;
}

std::vector<IntVector> identity_rows(std::size_t n) {
    std::vector<IntVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(IntVector{{i, mpz_class(1)}});
    return rows;
}

std::size_t kernel_dimension_of(const std::vector<IntVector> &columns) {
    return columns.size() - linalg::rank(columns);
}

} // namespace

std::map<SliceKey, std::vector<Monomial>> multidegrees_by_slice(const Partition &partition, std::size_t n) {
    std::map<SliceKey, std::vector<Monomial>> out;
    for (const auto &key : slice_keys(partition, n))
        out.emplace(key, monomials_in_slice(partition, key));
    return out;
}

// ---------------------------------------------------------------------------
// Kernels

Polynomial PolynomialKernel::element(const IntVector &v) const {
    Polynomial p(coordinates.empty() ? 0 : coordinates.front().arity());
    for (const auto &[i, x] : v)
        p.add_term(coordinates[i], Rational(x));
    return p;
}

std::vector<Polynomial> PolynomialKernel::elements() const {
    std::vector<Polynomial> out;
    for (const auto &v : basis)
        out.push_back(element(v));
    return out;
}

RatVector PolynomialKernel::coordinates_of(const Polynomial &p) const {
    RatVector v;
    for (const auto &[m, c] : p.terms()) {
        auto it = std::lower_bound(coordinates.begin(), coordinates.end(), m, GrlexLess{});
        if (it == coordinates.end() || !(*it == m))
            throw std::invalid_argument("PolynomialKernel: polynomial outside the slice " + key.to_string());
        v.emplace_back(static_cast<std::size_t>(it - coordinates.begin()), c);
    }
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return v;
}

LieElement CommutatorKernel::element(const IntVector &v) const {
    LieElement e(coordinates.empty() ? 0 : coordinates.front().arity());
    for (const auto &[i, x] : v)
        e.add_term(coordinates[i], Rational(x));
    return e;
}

std::vector<LieElement> CommutatorKernel::elements() const {
    std::vector<LieElement> out;
    for (const auto &v : basis)
        out.push_back(element(v));
    return out;
}

RatVector CommutatorKernel::coordinates_of(const LieElement &e) const {
    if (!e.is_commutator())
        throw std::invalid_argument("CommutatorKernel: element has a linear part");
    RatVector v;
    for (const auto &[m, c] : e.terms()) {
        auto it = std::lower_bound(coordinates.begin(), coordinates.end(), m);
        if (it == coordinates.end() || !(*it == m))
            throw std::invalid_argument("CommutatorKernel: element outside the slice " + key.to_string());
        v.emplace_back(static_cast<std::size_t>(it - coordinates.begin()), c);
    }
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return v;
}

PolynomialKernel polynomial_kernel(const Derivation &delta, const SliceKey &key) {
    PolynomialKernel k{key, monomials_in_slice(delta.partition(), key), {}};
    k.basis = key.weight == 0 ? identity_rows(k.coordinates.size())
                              : linalg::nullspace_of_columns(polynomial_columns(delta, k.coordinates));
    return k;
}

CommutatorKernel commutator_kernel(const Derivation &delta, const SliceKey &key) {
    CommutatorKernel k{key, lie_coordinates(delta.partition(), key), {}};
    k.basis = key.weight == 0 ? identity_rows(k.coordinates.size())
                              : linalg::nullspace_of_columns(commutator_columns(delta, k.coordinates));
    return k;
}

KernelSlice kernel_slice(const Derivation &delta, Space space, const SliceKey &key) {
    KernelSlice out;
    out.space = space;
    out.degree = key.degree();
    out.key = key;
    const bool linear = space == Space::whole_lie && key.degree() == 1;
    if (space == Space::polynomial || linear) {
        for (auto &p : polynomial_kernel(delta, key).elements()) {
            if (linear) {
                LieElement e(delta.arity());
                for (const auto &[m, c] : p.terms())
                    for (std::size_t j = 0; j < m.arity(); ++j)
                        if (m[j] == 1)
                            e.add_linear(static_cast<unsigned>(j), c);
                out.wreath_elements.push_back(embed(e));
                out.lie_elements.push_back(std::move(e));
            } else {
                out.polynomials.push_back(std::move(p));
            }
        }
        return out;
    }
    if (key.degree() < 2)
        return out;
    for (auto &e : commutator_kernel(delta, key).elements()) {
        out.wreath_elements.push_back(embed(e));
        out.lie_elements.push_back(std::move(e));
    }
    return out;
}

KernelSlice kernel_slice(const Derivation &delta, Space space, std::size_t degree) {
    if (degree < 1 || (space == Space::commutator && degree < 2))
        throw std::invalid_argument("kernel_slice: degree too small for the chosen space");
    KernelSlice out;
    out.space = space;
    out.degree = degree;
    for (const auto &key : slice_keys(delta.partition(), degree)) {
        auto part = kernel_slice(delta, space, key);
        for (auto &p : part.polynomials)
            out.polynomials.push_back(std::move(p));
        for (auto &e : part.lie_elements)
            out.lie_elements.push_back(std::move(e));
        for (auto &w : part.wreath_elements)
            out.wreath_elements.push_back(std::move(w));
    }
    return out;
}

namespace {

std::size_t slice_kernel_dimension(const Derivation &delta, Space space, const SliceKey &key) {
    const bool poly = space == Space::polynomial || (space == Space::whole_lie && key.degree() == 1);
    if (poly) {
        const auto coords = monomials_in_slice(delta.partition(), key);
        return key.weight == 0 ? coords.size() : kernel_dimension_of(polynomial_columns(delta, coords));
    }
    if (key.degree() < 2)
        return 0;
    const auto coords = lie_coordinates(delta.partition(), key);
    return key.weight == 0 ? coords.size() : kernel_dimension_of(commutator_columns(delta, coords));
}

} // namespace

BigradedDimensions bigraded_kernel_dimensions(const Derivation &delta, Space space, std::size_t max_degree) {
    std::vector<SliceKey> keys;
    for (std::size_t n = 1; n <= max_degree; ++n)
        for (auto &k : slice_keys(delta.partition(), n))
            keys.push_back(std::move(k));
    std::vector<std::size_t> dims(keys.size(), 0);
    parallel_for(keys.size(), [&](std::size_t i) { dims[i] = slice_kernel_dimension(delta, space, keys[i]); });
    BigradedDimensions out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (dims[i] > 0)
            out[{keys[i].degree(), bidegree_of(delta.partition(), keys[i])}] += dims[i];
    return out;
}

std::vector<std::size_t> kernel_dimensions(const Derivation &delta, Space space, std::size_t max_degree) {
    std::vector<std::size_t> dims(max_degree, 0);
    for (const auto &[nb, dim] : bigraded_kernel_dimensions(delta, space, max_degree))
        dims[nb.first - 1] += dim;
    return dims;
}

Polynomial graded_series(const std::vector<std::size_t> &dims) {
    Polynomial p(1);
    for (std::size_t n = 0; n < dims.size(); ++n)
        p.add_term(Monomial{static_cast<Exponent>(n + 1)}, Rational(static_cast<long>(dims[n])));
    return p;
}

Polynomial bigraded_series(const BigradedDimensions &dims) {
    Polynomial p(3);
    for (const auto &[nb, dim] : dims)
        p.add_term(Monomial{nb.second.first, nb.second.second, static_cast<Exponent>(nb.first)},
                   Rational(static_cast<long>(dim)));
    return p;
}

// ---------------------------------------------------------------------------
// Normalization

Polynomial normalized(const Polynomial &p) {
    if (p.is_zero())
        return p;
    RatVector v;
    std::vector<Monomial> monos;
    for (const auto &[m, c] : p.terms()) {
        v.emplace_back(monos.size(), c);
        monos.push_back(m);
    }
    Polynomial out(p.arity());
    for (const auto &[i, x] : linalg::primitive(linalg::to_integer(v)))
        out.add_term(monos[i], Rational(x));
    return out;
}

LieElement normalized(const LieElement &e) {
    if (e.is_zero())
        return e;
    RatVector v;
    const std::size_t d = e.arity();
    for (std::size_t j = 0; j < d; ++j)
        if (!e.linear()[j].is_zero())
            v.emplace_back(j, e.linear()[j]);
    std::vector<LieMonomial> monos;
    for (const auto &[m, c] : e.terms()) {
        v.emplace_back(d + monos.size(), c);
        monos.push_back(m);
    }
    LieElement out(d);
    for (const auto &[i, x] : linalg::primitive(linalg::to_integer(v))) {
        if (i < d)
            out.add_linear(static_cast<unsigned>(i), Rational(x));
        else
            out.add_term(monos[i - d], Rational(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Products of algebra generators

namespace {

/// Exponent vectors e with sum e_j key_j = target.
void exponents_rec(const std::vector<SliceKey> &keys, std::size_t j, const SliceKey &left, Monomial &current,
                   std::vector<Monomial> &out) {
    if (j == keys.size()) {
        if (left.degree() == 0 && left.weight == 0)
            out.push_back(current);
        return;
    }
    SliceKey rest = left;
    Exponent e = 0;
    while (true) {
        current.set(j, e);
        exponents_rec(keys, j + 1, rest, current, out);
        auto next = rest.minus(keys[j]);
        if (!next)
            break;
        rest = std::move(*next);
        ++e;
    }
    current.set(j, 0);
}

class AlgebraProducts {
public:
    AlgebraProducts(const Partition &partition, const std::vector<Polynomial> &algebra)
        : algebra_(algebra), arity_(partition.arity()) {
        for (const auto &f : algebra) {
            auto key = slice_key_of(partition, f);
            if (!key || key->degree() == 0)
                throw std::invalid_argument("algebra generator is not homogeneous of positive degree: " +
                                            f.to_string());
            keys_.push_back(std::move(*key));
        }
    }

    const std::vector<SliceKey> &keys() const { return keys_; }
    std::size_t count() const { return algebra_.size(); }

    /// Exponent vectors (as monomials in count() variables), ascending.
    std::vector<Monomial> exponents(const SliceKey &target) const {
        std::vector<Monomial> out;
        Monomial current(algebra_.size());
        if (algebra_.empty()) {
            if (target.degree() == 0 && target.weight == 0)
                out.push_back(current);
            return out;
        }
        exponents_rec(keys_, 0, target, current, out);
        std::sort(out.begin(), out.end(), GrlexLess{});
        return out;
    }

    Polynomial evaluate(const Monomial &e) {
        if (e.is_one())
            return Polynomial(arity_, Rational(1));
        auto it = cache_.find(e);
        if (it != cache_.end())
            return it->second;
        std::size_t j = 0;
        while (e[j] == 0)
            ++j;
        Monomial smaller = e;
        smaller.set(j, e[j] - 1);
        Polynomial value = evaluate(smaller) * algebra_[j];
        cache_.emplace(e, value);
        return value;
    }

private:
    const std::vector<Polynomial> &algebra_;
    std::size_t arity_;
    std::vector<SliceKey> keys_;
    std::map<Monomial, Polynomial, GrlexLess> cache_;
};

IntVector integer_vector(const RatVector &v) { return linalg::to_integer(v); }

/// Columns scaled by one common factor, so that their linear relations are kept.
std::vector<IntVector> integer_columns(const std::vector<RatVector> &columns) {
    mpz_class l = 1;
    for (const auto &v : columns)
        for (const auto &[c, x] : v)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<IntVector> out;
    out.reserve(columns.size());
    for (const auto &v : columns) {
        IntVector w;
        for (const auto &[c, x] : v)
            if (!x.is_zero())
                w.emplace_back(c, x.numerator() * (l / x.denominator()));
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

std::vector<Polynomial> invariant_generators(const Derivation &delta, std::size_t max_degree) {
    const Partition &partition = delta.partition();
    std::vector<Polynomial> gens;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const auto keys = slice_keys(partition, n);
        std::vector<std::vector<Polynomial>> found(keys.size());
        parallel_for(keys.size(), [&](std::size_t i) {
            const auto kernel = polynomial_kernel(delta, keys[i]);
            if (kernel.dimension() == 0)
                return;
            AlgebraProducts products(partition, gens);
            EchelonBasis span;
            for (const auto &e : products.exponents(keys[i]))
                span.insert(integer_vector(kernel.coordinates_of(products.evaluate(e))));
            for (const auto &v : kernel.basis)
                if (span.insert(v))
                    found[i].push_back(normalized(kernel.element(v)));
        });
        for (auto &f : found)
            for (auto &p : f)
                gens.push_back(std::move(p));
    }
    return gens;
}

namespace {

Polynomial parse_in(std::string_view text, std::size_t arity) { return Polynomial::parse(text, arity); }

/// Appends x_first..x_last of the trailing 1x1 cells.
void append_trivial_cells(std::vector<Polynomial> &gens, std::size_t core_arity, std::size_t arity) {
    for (std::size_t j = core_arity; j < arity; ++j)
        gens.push_back(Polynomial::variable(arity, j));
}

} // namespace

std::optional<std::vector<Polynomial>> builtin_invariants(const Partition &partition) {
    const auto &cells = partition.cells();
    std::size_t core = cells.size();
    while (core > 0 && cells[core - 1] == 0)
        --core;
    const std::vector<unsigned> head(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(core));
    const std::size_t d = partition.arity();
    std::size_t core_arity = 0;
    for (auto p : head)
        core_arity += p + 1;

    std::vector<Polynomial> gens;
    const bool all_ones = !head.empty() && std::all_of(head.begin(), head.end(), [](unsigned p) { return p == 1; });
    if (head.empty()) {
        // delta = 0 on every variable.
    } else if (all_ones) {
        for (std::size_t i = 0; i < head.size(); ++i)
            gens.push_back(Polynomial::variable(d, 2 * i));
        for (std::size_t i = 0; i < head.size(); ++i)
            for (std::size_t j = i + 1; j < head.size(); ++j)
                gens.push_back(Polynomial::variable(d, 2 * i) * Polynomial::variable(d, 2 * j + 1) -
                               Polynomial::variable(d, 2 * i + 1) * Polynomial::variable(d, 2 * j));
    } else if (head == std::vector<unsigned>{2}) {
        gens = {parse_in("x1", d), parse_in("x2^2 - 2*x1*x3", d)};
    } else if (head == std::vector<unsigned>{3}) {
        gens = {parse_in("x1", d), parse_in("x2^2 - 2*x1*x3", d), parse_in("x2^3 - 3*x1*x2*x3 + 3*x1^2*x4", d),
                parse_in("x2^2*x3^2 - 2*x2^3*x4 + 6*x1*x2*x3*x4 - 8/3*x1*x3^3 - 3*x1^2*x4^2", d)};
    } else {
        return std::nullopt;
    }
    append_trivial_cells(gens, core_arity, d);

    const Derivation delta(partition);
    for (const auto &f : gens)
        if (!delta.apply(f).is_zero())
            throw std::logic_error("builtin_invariants: table entry " + f.to_string() + " is not a constant");
    return gens;
}

// ---------------------------------------------------------------------------
// Module generators

ModuleGenerator make_generator(const Partition &partition, const LieElement &e) {
    if (e.arity() != partition.arity())
        throw ArityMismatch("make_generator: arity mismatch");
    auto key = slice_key_of(partition, e);
    if (!key)
        throw std::invalid_argument("make_generator: element is zero or not homogeneous: " + e.to_string());
    ModuleGenerator g;
    g.element = e;
    g.wreath = embed(e);
    g.bidegree = bidegree_of(partition, *key);
    g.degree = key->degree();
    g.key = std::move(*key);
    return g;
}

namespace {

struct ProductIndexLess {
    bool operator()(const std::pair<std::size_t, Monomial> &a, const std::pair<std::size_t, Monomial> &b) const {
        if (a.first != b.first)
            return a.first < b.first;
        return GrlexLess{}(a.second, b.second);
    }
};

/// The formal products c_g * F^e falling into one slice.
struct FormalProducts {
    std::vector<std::pair<std::size_t, Monomial>> items;
    std::map<std::pair<std::size_t, Monomial>, std::size_t, ProductIndexLess> index;
    std::vector<IntVector> values; // coordinates in the slice

    void add(std::size_t g, Monomial e, RatVector value) {
        index.emplace(std::make_pair(g, e), items.size());
        items.emplace_back(g, std::move(e));
        rational.push_back(std::move(value));
    }

    std::vector<RatVector> rational;
};

FormalProducts formal_products(const std::vector<ModuleGenerator> &module, AlgebraProducts &products,
                               const CommutatorKernel &slice) {
    FormalProducts out;
    for (std::size_t g = 0; g < module.size(); ++g) {
        auto rest = slice.key.minus(module[g].key);
        if (!rest)
            continue;
        for (const auto &e : products.exponents(*rest)) {
            const WreathElement value = module_action(module[g].wreath, products.evaluate(e));
            out.add(g, e, slice.coordinates_of(lie_from_wreath(value)));
        }
    }
    out.values = integer_columns(out.rational);
    return out;
}

Relation relation_from_vector(const IntVector &v, const FormalProducts &formal, std::size_t module_count,
                              std::size_t algebra_count, const SliceKey &key, const Partition &partition) {
    Relation r;
    r.coefficients.assign(module_count, Polynomial(algebra_count));
    for (const auto &[i, x] : v) {
        const auto &[g, e] = formal.items[i];
        r.coefficients[g].add_term(e, Rational(x));
    }
    r.degree = key.degree();
    r.bidegree = bidegree_of(partition, key);
    return r;
}

struct SliceDiscovery {
    std::vector<LieElement> generators;
    std::vector<Relation> relations;
};

} // namespace

DiscoveryResult module_generators(const Derivation &delta, const std::vector<Polynomial> &algebra,
                                  std::size_t max_degree) {
    const Partition &partition = delta.partition();
    for (const auto &f : algebra) {
        if (f.arity() != partition.arity())
            throw ArityMismatch("module_generators: algebra generator has the wrong arity");
        if (!delta.apply(f).is_zero())
            throw std::invalid_argument("module_generators: " + f.to_string() + " is not a constant");
    }
    const AlgebraProducts shape(partition, algebra);
    const std::size_t l = algebra.size();

    DiscoveryResult result{GeneratorSet{partition, algebra, {}}, {}};
    std::vector<SliceKey> relation_keys;
    for (std::size_t n = 2; n <= max_degree; ++n) {
        const auto keys = slice_keys(partition, n);
        std::vector<SliceDiscovery> found(keys.size());
        const auto &module = result.generators.module;
        parallel_for(keys.size(), [&](std::size_t i) {
            const auto kernel = commutator_kernel(delta, keys[i]);
            if (kernel.dimension() == 0)
                return;
            AlgebraProducts products(partition, algebra);
            const FormalProducts formal = formal_products(module, products, kernel);

            EchelonBasis span;
            for (const auto &v : formal.values)
                span.insert(v);
            for (const auto &v : kernel.basis)
                if (span.insert(v))
                    found[i].generators.push_back(normalized(kernel.element(v)));

            const auto relations = linalg::nullspace_of_columns(formal.values);
            if (relations.empty())
                return;
            // Relations implied by smaller ones: earlier minimal relations
            // times products of the f's, and generators times relations
            // among the f's.
            EchelonBasis implied;
            for (std::size_t r = 0; r < result.relations.size(); ++r) {
                auto rest = keys[i].minus(relation_keys[r]);
                if (!rest)
                    continue;
                for (const auto &e : products.exponents(*rest)) {
                    RatVector v;
                    for (std::size_t g = 0; g < result.relations[r].coefficients.size(); ++g)
                        for (const auto &[m, c] : result.relations[r].coefficients[g].terms())
                            v.emplace_back(formal.index.at({g, m * e}), c);
                    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
                    implied.insert(integer_vector(v));
                }
            }
            std::map<SliceKey, std::vector<IntVector>> algebra_relations;
            for (std::size_t g = 0; g < module.size(); ++g) {
                auto rest = keys[i].minus(module[g].key);
                if (!rest)
                    continue;
                auto it = algebra_relations.find(*rest);
                if (it == algebra_relations.end()) {
                    const auto exps = products.exponents(*rest);
                    std::vector<RatVector> columns;
                    const PolynomialKernel target{*rest, monomials_in_slice(partition, *rest), {}};
                    for (const auto &e : exps)
                        columns.push_back(target.coordinates_of(products.evaluate(e)));
                    std::vector<IntVector> rel_in_formal;
                    for (const auto &a : linalg::nullspace_of_columns(integer_columns(columns))) {
                        IntVector v;
                        for (const auto &[j, x] : a)
                            v.emplace_back(j, x);
                        rel_in_formal.push_back(std::move(v));
                    }
                    it = algebra_relations.emplace(*rest, std::move(rel_in_formal)).first;
                }
                const auto exps = products.exponents(*rest);
                for (const auto &a : it->second) {
                    IntVector v;
                    for (const auto &[j, x] : a)
                        v.emplace_back(formal.index.at({g, exps[j]}), x);
                    std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
                    implied.insert(std::move(v));
                }
            }
            for (const auto &v : relations)
                if (implied.insert(v))
                    found[i].relations.push_back(
                        relation_from_vector(v, formal, module.size(), l, keys[i], partition));
        });
        for (std::size_t i = 0; i < keys.size(); ++i) {
            for (auto &e : found[i].generators)
                result.generators.module.push_back(make_generator(partition, e));
            for (auto &r : found[i].relations) {
                result.relations.push_back(std::move(r));
                relation_keys.push_back(keys[i]);
            }
        }
        // Earlier relations gain zero coefficients for the new generators.
        for (auto &r : result.relations)
            r.coefficients.resize(result.generators.module.size(), Polynomial(l));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Relations

namespace {

std::vector<std::string> relation_names(std::size_t k, std::size_t l) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < k; ++j)
        names.push_back("c" + std::to_string(j + 1));
    for (std::size_t j = 0; j < l; ++j)
        names.push_back("f" + std::to_string(j + 1));
    return names;
}

} // namespace

Relation Relation::parse(std::string_view text, std::size_t module_count, std::size_t algebra_count) {
    const auto names = relation_names(module_count, algebra_count);
    const Polynomial p = Polynomial::parse(text, module_count + algebra_count, names);
    Relation r;
    r.coefficients.assign(module_count, Polynomial(algebra_count));
    for (const auto &[m, c] : p.terms()) {
        std::optional<std::size_t> g;
        for (std::size_t j = 0; j < module_count; ++j) {
            if (m[j] == 0)
                continue;
            if (g || m[j] > 1)
                throw std::invalid_argument("Relation::parse: term is not linear in the module generators");
            g = j;
        }
        if (!g)
            throw std::invalid_argument("Relation::parse: term without a module generator");
        std::vector<Exponent> e(algebra_count);
        for (std::size_t j = 0; j < algebra_count; ++j)
            e[j] = m[module_count + j];
        r.coefficients[*g].add_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::string Relation::to_string() const {
    const std::size_t k = coefficients.size();
    const std::size_t l = k == 0 ? 0 : coefficients.front().arity();
    Polynomial p(k + l);
    for (std::size_t g = 0; g < k; ++g)
        for (const auto &[m, c] : coefficients[g].terms()) {
            std::vector<Exponent> e(k + l, 0);
            e[g] = 1;
            for (std::size_t j = 0; j < l; ++j)
                e[k + j] = m[j];
            p.add_term(Monomial(std::move(e)), c);
        }
    return p.to_string(relation_names(k, l));
}

WreathElement evaluate_relation(const Relation &r, const GeneratorSet &gens) {
    if (r.coefficients.size() > gens.module.size())
        throw std::invalid_argument("evaluate_relation: relation references " + std::to_string(r.coefficients.size()) +
                                    " module generators, set has " + std::to_string(gens.module.size()));
    const std::size_t d = gens.partition.arity();
    WreathElement sum(d);
    std::vector<Polynomial> images = gens.algebra;
    for (std::size_t g = 0; g < r.coefficients.size(); ++g) {
        const Polynomial &u = r.coefficients[g];
        if (u.is_zero())
            continue;
        if (u.arity() != gens.algebra.size())
            throw std::invalid_argument("evaluate_relation: relation uses " + std::to_string(u.arity()) +
                                        " algebra generators, set has " + std::to_string(gens.algebra.size()));
        sum += module_action(gens.module[g].wreath, substitute(u, images));
    }
    return sum;
}

bool verify_relation(const Relation &r, const GeneratorSet &gens) { return evaluate_relation(r, gens).is_zero(); }

std::optional<SliceKey> relation_key(const Relation &r, const GeneratorSet &gens) {
    const Partition &partition = gens.partition;
    std::vector<SliceKey> fkeys;
    for (const auto &f : gens.algebra) {
        if (f.is_zero())
            return std::nullopt;
        fkeys.push_back(slice_key_of(partition, f.terms().begin()->first));
    }
    std::optional<SliceKey> key;
    for (std::size_t g = 0; g < r.coefficients.size() && g < gens.module.size(); ++g)
        for (const auto &[m, c] : r.coefficients[g].terms()) {
            SliceKey k = gens.module[g].key;
            for (std::size_t j = 0; j < fkeys.size(); ++j)
                for (Exponent e = 0; e < m[j]; ++e)
                    k = k + fkeys[j];
            if (key && *key != k)
                return std::nullopt;
            key = k;
        }
    return key;
}

bool assign_grading(Relation &r, const GeneratorSet &gens) {
    const auto key = relation_key(r, gens);
    if (!key)
        return false;
    r.degree = key->degree();
    r.bidegree = bidegree_of(gens.partition, *key);
    return true;
}

// ---------------------------------------------------------------------------
// pi and lifting

Polynomial extend_arity(const Polynomial &p, std::size_t arity) {
    if (arity < p.arity())
        throw ArityMismatch("extend_arity: target arity too small");
    Polynomial out(arity);
    for (const auto &[m, c] : p.terms()) {
        std::vector<Exponent> e(arity, 0);
        for (std::size_t j = 0; j < m.arity(); ++j)
            e[j] = m[j];
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

WreathElement pi_map(const Polynomial &p, std::size_t d) {
    if (d < 2 || p.arity() != d - 1)
        throw ArityMismatch("pi_map: polynomial must have d - 1 variables");
    if (!p.coefficient(Monomial(p.arity())).is_zero())
        throw std::invalid_argument("pi_map: polynomial has a nonzero constant term");
    const Polynomial q = extend_arity(p, d);
    // a_d * E(q) - sum_j a_j x_d dq/dx_j, with E the Euler operator.
    WreathElement out(d);
    for (const auto &[m, c] : q.terms())
        out.a(d - 1).add_term(m, c * Rational(static_cast<long>(m.degree())));
    const Monomial xd = Monomial::variable(d, d - 1);
    for (std::size_t j = 0; j + 1 < d; ++j)
        out.a(j) -= q.derivative(j).mul_monomial(xd);
    return out;
}

GeneratorSet lift_generators(const Derivation &delta, const GeneratorSet &lower) {
    const Partition &partition = delta.partition();
    if (!partition.has_trailing_trivial_cell() || partition.cell_count() < 2)
        throw std::invalid_argument("lift_generators: derivation " + partition.to_string() +
                                    " has no trailing 1x1 cell");
    if (!(lower.partition == partition.without_last_cell()))
        throw std::invalid_argument("lift_generators: lower generators belong to " + lower.partition.to_string());
    const std::size_t d = partition.arity();
    GeneratorSet out{partition, {}, {}};
    for (const auto &c : lower.module)
        out.module.push_back(make_generator(partition, c.element.extended(d)));
    for (const auto &f : lower.algebra)
        out.module.push_back(make_generator(partition, lie_from_wreath(pi_map(f, d))));
    for (const auto &f : lower.algebra)
        out.algebra.push_back(extend_arity(f, d));
    out.algebra.push_back(Polynomial::variable(d, d - 1));
    return out;
}

// ---------------------------------------------------------------------------
// Generation check

bool SpanReport::generates() const { return !first_failure(); }

std::optional<SliceSpan> SpanReport::first_failure() const {
    for (const auto &s : slices)
        if (!s.products_constant || s.span_rank != s.kernel_dimension)
            return s;
    return std::nullopt;
}

SpanReport check_generation(const Derivation &delta, const GeneratorSet &gens, std::size_t max_degree) {
    const Partition &partition = delta.partition();
    std::vector<SliceKey> keys;
    for (std::size_t n = 2; n <= max_degree; ++n)
        for (auto &k : slice_keys(partition, n))
            keys.push_back(std::move(k));
    SpanReport report;
    report.slices.resize(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        const auto kernel = commutator_kernel(delta, keys[i]);
        AlgebraProducts products(partition, gens.algebra);
        const FormalProducts formal = formal_products(gens.module, products, kernel);
        EchelonBasis kernel_span;
        for (const auto &v : kernel.basis)
            kernel_span.insert(v);
        EchelonBasis span;
        bool constant = true;
        for (const auto &v : formal.values) {
            span.insert(v);
            if (!kernel_span.contains(v))
                constant = false;
        }
        report.slices[i] = SliceSpan{keys[i], kernel.dimension(), span.rank(), constant};
    });
    return report;
}

} // namespace wdk
