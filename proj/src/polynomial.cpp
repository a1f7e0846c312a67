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

#include "wdk/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace wdk {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
    Monomial m(arity);
    m.set(index, power);
    return m;
}

void Monomial::recount() {
    degree_ = 0;
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::operator*(const Monomial &o) const {
    Monomial r = *this;
    r *= o;
    return r;
}

Monomial &Monomial::operator*=(const Monomial &o) {
    if (o.arity() != arity())
        throw ArityMismatch("Monomial: arity mismatch in product");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps_[i] += o.exps_[i];
    degree_ += o.degree_;
    return *this;
}

bool Monomial::divides(const Monomial &o) const {
    if (o.arity() != arity())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial &o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= exps_[i];
    r.degree_ -= degree_;
    return r;
}

Monomial Monomial::pow(Exponent k) const {
    Monomial r = *this;
    for (auto &e : r.exps_)
        e *= k;
    r.degree_ *= k;
    return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool GrlexLess::operator()(const Monomial &a, const Monomial &b) const {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    if (ea.size() != eb.size())
        return ea.size() < eb.size();
    for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i])
            return ea[i] < eb[i];
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t arity, const Rational &c) : arity_(arity) {
    if (!c.is_zero())
        terms_.emplace(Monomial(arity), c);
}

Polynomial::Polynomial(const Monomial &m, const Rational &c) : arity_(m.arity()) {
    if (!c.is_zero())
        terms_.emplace(m, c);
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity)
        throw std::out_of_range("Polynomial::variable: index out of range");
    return Polynomial(Monomial::variable(arity, index));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
    if (m.arity() != arity_)
        throw ArityMismatch("Polynomial::add_term: arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    if (o.arity_ != arity_)
        throw ArityMismatch("Polynomial: arity mismatch in sum");
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
    if (o.arity_ != arity_)
        throw ArityMismatch("Polynomial: arity mismatch in difference");
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::mul(const Polynomial &a, const Polynomial &b) {
    if (a.arity_ != b.arity_)
        throw ArityMismatch("Polynomial: arity mismatch in product");
    Polynomial r(a.arity_);
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial &m) const {
    if (m.arity() != arity_)
        throw ArityMismatch("Polynomial::mul_monomial: arity mismatch");
    Polynomial r(arity_);
    for (const auto &[mt, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), mt * m, c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(arity_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U)
            result = mul(result, base);
        k >>= 1U;
        if (k > 0)
            base = mul(base, base);
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    Polynomial r(arity_);
    for (const auto &[m, c] : terms_) {
        const Exponent e = m[index];
        if (e == 0)
            continue;
        Monomial dm = m;
        dm.set(index, e - 1);
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Polynomial Polynomial::truncated(std::uint64_t n) const {
    Polynomial r(arity_);
    for (const auto &[m, c] : terms_) {
        if (m.degree() > n)
            break;
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

Polynomial Polynomial::truncated_in(std::size_t index, Exponent n) const {
    Polynomial r(arity_);
    for (const auto &[m, c] : terms_)
        if (m[index] <= n)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Polynomial Polynomial::homogeneous_part(std::uint64_t n) const {
    Polynomial r(arity_);
    for (const auto &[m, c] : terms_)
        if (m.degree() == n)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial &divisor) const {
    if (divisor.arity_ != arity_)
        throw ArityMismatch("Polynomial::divide_exact: arity mismatch");
    if (divisor.is_zero())
        throw std::domain_error("Polynomial::divide_exact: division by zero");
    const auto &[lead_m, lead_c] = *divisor.terms_.rbegin();
    Polynomial rest = *this;
    Polynomial quotient(arity_);
    while (!rest.is_zero()) {
        const auto &[m, c] = *rest.terms_.rbegin();
        if (!lead_m.divides(m))
            return std::nullopt;
        const Monomial q = lead_m.quotient_of(m);
        const Rational qc = c / lead_c;
        quotient.add_term(q, qc);
        rest -= divisor.mul_monomial(q) * qc;
    }
    return quotient;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    // Highest terms first, the way polynomials are usually read.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one())
                out += mag.to_string() + "*";
            out += m.to_string(names);
        }
    }
    return out;
}

Polynomial substitute(const Polynomial &p, std::span<const Polynomial> images) {
    if (images.size() != p.arity())
        throw ArityMismatch("substitute: need one image per variable");
    if (images.empty())
        throw ArityMismatch("substitute: no images");
    const std::size_t target = images.front().arity();
    for (const auto &img : images)
        if (img.arity() != target)
            throw ArityMismatch("substitute: images of different arity");

    // Cache powers of each image; exponents are small in practice.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, Exponent e) -> const Polynomial & {
        auto &cache = powers[i];
        if (cache.empty())
            cache.emplace_back(target, Rational(1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial result(target);
    for (const auto &[m, c] : p.terms()) {
        Polynomial term(target, c);
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i] > 0)
                term = term * power(i, m[i]);
        result += term;
    }
    return result;
}

std::vector<std::string> default_names(std::size_t arity) {
    std::vector<std::string> names;
    names.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t arity, std::span<const std::string> names)
        : text_(text), arity_(arity),
          names_(names.empty() ? default_names(arity) : std::vector<std::string>(names.begin(), names.end())) {}

    Polynomial run() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("Polynomial::parse: " + what + " at position " + std::to_string(pos_) +
                                    " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        Polynomial sum(arity_);
        bool first = true;
        while (true) {
            skip_ws();
            bool negative = false;
            if (accept('-'))
                negative = true;
            else if (!accept('+') && !first)
                break;
            Polynomial t = term();
            sum += negative ? -t : t;
            first = false;
            skip_ws();
            if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
                break;
        }
        return sum;
    }

    Polynomial term() {
        Polynomial t = factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                t = t * factor();
                continue;
            }
            // Implicit product: "2x1", "3(x1+x2)".
            if (pos_ < text_.size() && (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
                t = t * factor();
                continue;
            }
            break;
        }
        return t;
    }

    unsigned exponent() {
        if (!accept('^'))
            return 1;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected exponent");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner.pow(exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            return Polynomial(arity_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end())
                fail("unknown variable '" + name + "'");
            const auto index = static_cast<std::size_t>(it - names_.begin());
            return Polynomial(Monomial::variable(arity_, index, exponent()));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t arity_;
    std::vector<std::string> names_;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t arity, std::span<const std::string> names) {
    return PolyParser(text, arity, names).run();
}

} // namespace wdk
