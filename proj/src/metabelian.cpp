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

#include "wdk/metabelian.hpp"

#include <algorithm>
#include <cctype>

namespace wdk {

// ---------------------------------------------------------------------------
// LieMonomial

LieMonomial::LieMonomial(std::size_t arity, unsigned head, unsigned second, std::vector<unsigned> tail)
    : arity_(arity), head_(head), second_(second), tail_(std::move(tail)) {
    std::sort(tail_.begin(), tail_.end());
    if (head_ >= arity_ || second_ >= arity_ || (!tail_.empty() && tail_.back() >= arity_))
        throw std::invalid_argument("LieMonomial: variable index out of range");
    if (head_ <= second_)
        throw std::invalid_argument("LieMonomial: need head > second");
    if (!tail_.empty() && tail_.front() < second_)
        throw std::invalid_argument("LieMonomial: second index must not exceed the tail");
}

Monomial LieMonomial::multidegree() const {
    Monomial m(arity_);
    m.set(head_, m[head_] + 1);
    m.set(second_, m[second_] + 1);
    for (auto t : tail_)
        m.set(t, m[t] + 1);
    return m;
}

std::vector<unsigned> LieMonomial::word() const {
    std::vector<unsigned> w{head_, second_};
    w.insert(w.end(), tail_.begin(), tail_.end());
    return w;
}

std::strong_ordering operator<=>(const LieMonomial &a, const LieMonomial &b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0)
        return c;
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = (a.head_ + a.second_) <=> (b.head_ + b.second_); c != 0)
        return c;
    if (auto c = a.head_ <=> b.head_; c != 0)
        return c;
    return a.tail_ <=> b.tail_;
}

std::string LieMonomial::to_string() const {
    std::string out = "[";
    bool first = true;
    for (auto j : word()) {
        if (!first)
            out += ",";
        first = false;
        out += "x" + std::to_string(j + 1);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::generator(std::size_t arity, unsigned index) {
    LieElement e(arity);
    e.add_linear(index, Rational(1));
    return e;
}

LieElement LieElement::monomial(const LieMonomial &m, const Rational &c) {
    LieElement e(m.arity());
    e.add_term(m, c);
    return e;
}

LieElement LieElement::from_word(std::size_t arity, const std::vector<unsigned> &word) {
    for (auto j : word)
        if (j >= arity)
            throw std::invalid_argument("LieElement::from_word: variable index out of range");
    if (word.empty())
        throw std::invalid_argument("LieElement::from_word: empty word");
    if (word.size() == 1)
        return generator(arity, word.front());
    unsigned a = word[0];
    unsigned b = word[1];
    LieElement result(arity);
    if (a == b)
        return result;
    Rational sign(1);
    if (a < b) {
        std::swap(a, b);
        sign = Rational(-1);
    }
    std::vector<unsigned> tail(word.begin() + 2, word.end());
    std::sort(tail.begin(), tail.end());
    if (tail.empty() || b <= tail.front()) {
        result.add_term(LieMonomial(arity, a, b, std::move(tail)), sign);
        return result;
    }
    // Smallest index c sits in the tail, c < b < a:
    // [a,b,c,...] = [a,c,b,...] - [b,c,a,...].
    const unsigned c = tail.front();
    std::vector<unsigned> rest(tail.begin() + 1, tail.end());
    std::vector<unsigned> first_tail = rest;
    first_tail.push_back(b);
    std::vector<unsigned> second_tail = rest;
    second_tail.push_back(a);
    result.add_term(LieMonomial(arity, a, c, std::move(first_tail)), sign);
    result.add_term(LieMonomial(arity, b, c, std::move(second_tail)), -sign);
    return result;
}

bool LieElement::is_zero() const {
    return terms_.empty() && std::all_of(linear_.begin(), linear_.end(), [](const Rational &r) { return r.is_zero(); });
}

bool LieElement::is_commutator() const {
    return std::all_of(linear_.begin(), linear_.end(), [](const Rational &r) { return r.is_zero(); });
}

void LieElement::add_linear(unsigned index, const Rational &c) {
    if (index >= linear_.size())
        throw std::invalid_argument("LieElement::add_linear: index out of range");
    linear_[index] += c;
}

void LieElement::add_term(const LieMonomial &m, const Rational &c) {
    if (m.arity() != arity())
        throw ArityMismatch("LieElement: arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LieElement LieElement::operator-() const {
    LieElement r = *this;
    r *= Rational(-1);
    return r;
}

LieElement &LieElement::operator+=(const LieElement &o) {
    if (o.arity() != arity())
        throw ArityMismatch("LieElement: arity mismatch in sum");
    for (std::size_t i = 0; i < linear_.size(); ++i)
        linear_[i] += o.linear_[i];
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) { return *this += -o; }

LieElement &LieElement::operator*=(const Rational &c) {
    for (auto &l : linear_)
        l *= c;
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

LieElement LieElement::homogeneous_part(std::size_t n) const {
    LieElement r(arity());
    if (n == 1)
        r.linear_ = linear_;
    for (const auto &[m, c] : terms_)
        if (m.degree() == n)
            r.terms_.emplace(m, c);
    return r;
}

LieElement LieElement::extended(std::size_t arity) const {
    if (arity < this->arity())
        throw ArityMismatch("LieElement::extended: target arity too small");
    LieElement r(arity);
    for (std::size_t i = 0; i < linear_.size(); ++i)
        r.linear_[i] = linear_[i];
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(LieMonomial(arity, m.head(), m.second(), m.tail()), c);
    return r;
}

namespace {

void append_signed(std::string &out, const Rational &c, const std::string &body, bool &first) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first)
        out += c.sign() < 0 ? "-" : "";
    else
        out += c.sign() < 0 ? " - " : " + ";
    first = false;
    if (!mag.is_one())
        out += mag.to_string() + (body.front() == '[' ? "" : "*");
    out += body;
}

} // namespace

std::string LieElement::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < linear_.size(); ++i)
        if (!linear_[i].is_zero())
            append_signed(out, linear_[i], "x" + std::to_string(i + 1), first);
    for (const auto &[m, c] : terms_)
        append_signed(out, c, m.to_string(), first);
    return first ? "0" : out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class LieParser {
public:
    LieParser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

    LieElement run() {
        LieElement e = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("LieElement::parse: " + what + " at position " + std::to_string(pos_) +
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

    LieElement expression() {
        LieElement sum(arity_);
        bool first = true;
        while (true) {
            bool negative = false;
            if (accept('-'))
                negative = true;
            else if (!accept('+') && !first)
                break;
            LieElement t = term();
            sum += negative ? -t : t;
            first = false;
            skip_ws();
            if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
                break;
        }
        return sum;
    }

    LieElement term() {
        skip_ws();
        Rational coeff(1);
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            coeff = Rational::parse(text_.substr(start, pos_ - start));
            accept('*');
            skip_ws();
            if (pos_ >= text_.size() || (text_[pos_] != '[' && text_[pos_] != '(' && text_[pos_] != 'x'))
                fail("a scalar alone is not a Lie element");
        }
        return atom() * coeff;
    }

    unsigned variable() {
        skip_ws();
        if (!accept('x'))
            fail("expected variable");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected variable index");
        const auto index = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (index == 0 || index > arity_)
            fail("variable index out of range");
        return static_cast<unsigned>(index - 1);
    }

    LieElement atom() {
        if (accept('(')) {
            LieElement inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (accept('[')) {
            std::vector<unsigned> word{variable()};
            while (accept(','))
                word.push_back(variable());
            if (!accept(']'))
                fail("expected ']'");
            if (word.size() < 2)
                fail("a commutator needs at least two entries");
            return LieElement::from_word(arity_, word);
        }
        return LieElement::generator(arity_, variable());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t arity_;
};

} // namespace

LieElement LieElement::parse(std::string_view text, std::size_t arity) { return LieParser(text, arity).run(); }

// ---------------------------------------------------------------------------
// WreathElement

WreathElement::WreathElement(std::size_t arity) : b_(arity) {
    a_.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        a_.emplace_back(arity);
}

WreathElement::WreathElement(std::vector<Polynomial> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size())
        throw ArityMismatch("WreathElement: coordinate count mismatch");
    for (const auto &p : a_)
        if (p.arity() != b_.size())
            throw ArityMismatch("WreathElement: polynomial arity must equal d");
}

bool WreathElement::is_zero() const {
    return has_zero_b_part() && std::all_of(a_.begin(), a_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

bool WreathElement::has_zero_b_part() const {
    return std::all_of(b_.begin(), b_.end(), [](const Rational &r) { return r.is_zero(); });
}

WreathElement WreathElement::operator-() const {
    WreathElement r = *this;
    r *= Rational(-1);
    return r;
}

WreathElement &WreathElement::operator+=(const WreathElement &o) {
    if (o.arity() != arity())
        throw ArityMismatch("WreathElement: arity mismatch in sum");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] += o.a_[i];
        b_[i] += o.b_[i];
    }
    return *this;
}

WreathElement &WreathElement::operator-=(const WreathElement &o) { return *this += -o; }

WreathElement &WreathElement::operator*=(const Rational &c) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] *= c;
        b_[i] *= c;
    }
    return *this;
}

std::string WreathElement::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i].is_zero())
            continue;
        out += first ? "" : " + ";
        first = false;
        out += "a" + std::to_string(i + 1) + "*(" + a_[i].to_string() + ")";
    }
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].is_zero())
            continue;
        out += first ? "" : " + ";
        first = false;
        out += "(" + b_[i].to_string() + ")*b" + std::to_string(i + 1);
    }
    return first ? "0" : out;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

/// epsilon([x_a, x_b] * x^rest) added into `out` with coefficient c.
void add_bracket_image(WreathElement &out, unsigned a, unsigned b, const Monomial &rest, const Rational &c) {
    Monomial ma = rest;
    ma.set(b, ma[b] + 1);
    out.a(a).add_term(ma, c);
    Monomial mb = rest;
    mb.set(a, mb[a] + 1);
    out.a(b).add_term(mb, -c);
}

} // namespace

WreathElement embed(const LieElement &e) {
    const std::size_t d = e.arity();
    WreathElement out(d);
    for (std::size_t j = 0; j < d; ++j) {
        const Rational &beta = e.linear()[j];
        if (beta.is_zero())
            continue;
        out.a(j).add_term(Monomial(d), beta);
        out.b(j) += beta;
    }
    for (const auto &[m, c] : e.terms()) {
        Monomial rest(d);
        for (auto t : m.tail())
            rest.set(t, rest[t] + 1);
        add_bracket_image(out, m.head(), m.second(), rest, c);
    }
    return out;
}

WreathElement embed_word(std::size_t arity, const std::vector<unsigned> &word) {
    if (word.empty())
        throw std::invalid_argument("embed_word: empty word");
    for (auto j : word)
        if (j >= arity)
            throw std::invalid_argument("embed_word: variable index out of range");
    WreathElement out(arity);
    if (word.size() == 1) {
        out.a(word[0]).add_term(Monomial(arity), Rational(1));
        out.b(word[0]) += Rational(1);
        return out;
    }
    Monomial rest(arity);
    for (std::size_t k = 2; k < word.size(); ++k)
        rest.set(word[k], rest[word[k]] + 1);
    add_bracket_image(out, word[0], word[1], rest, Rational(1));
    return out;
}

WreathElement wreath_bracket(const WreathElement &u, const WreathElement &v) {
    if (u.arity() != v.arity())
        throw ArityMismatch("wreath_bracket: arity mismatch");
    const std::size_t d = u.arity();
    Polynomial beta_x(d);
    Polynomial gamma_x(d);
    for (std::size_t j = 0; j < d; ++j) {
        beta_x.add_term(Monomial::variable(d, j), u.b()[j]);
        gamma_x.add_term(Monomial::variable(d, j), v.b()[j]);
    }
    WreathElement out(d);
    for (std::size_t i = 0; i < d; ++i)
        out.a(i) = u.a()[i] * gamma_x - v.a()[i] * beta_x;
    return out;
}

WreathElement module_action(const WreathElement &u, const Polynomial &p) {
    if (!u.has_zero_b_part())
        throw std::invalid_argument("module_action: element has a nonzero b-part");
    if (p.arity() != u.arity())
        throw ArityMismatch("module_action: arity mismatch");
    WreathElement out(u.arity());
    for (std::size_t i = 0; i < u.arity(); ++i)
        out.a(i) = u.a()[i] * p;
    return out;
}

bool in_commutator_ideal(const WreathElement &u) {
    if (!u.has_zero_b_part())
        return false;
    const std::size_t d = u.arity();
    Polynomial sum(d);
    for (std::size_t i = 0; i < d; ++i)
        sum += u.a()[i].mul_monomial(Monomial::variable(d, i));
    return sum.is_zero();
}

LieElement lie_from_wreath(const WreathElement &u) {
    const std::size_t d = u.arity();
    LieElement out(d);
    WreathElement rest = u;
    for (std::size_t j = 0; j < d; ++j) {
        const Rational beta = u.b()[j];
        if (beta.is_zero())
            continue;
        out.add_linear(static_cast<unsigned>(j), beta);
        rest.a(j).add_term(Monomial(d), -beta);
        rest.b(j) = Rational(0);
    }
    if (!in_commutator_ideal(rest))
        throw NotInImage("lie_from_wreath: element is not in the image of the embedding");

    // Group a_i x^beta by the multidegree beta + e_i; inside one multidegree the
    // images of the normal forms [x_k, x_mu, ...] (mu the smallest index) are
    // a_k x^(alpha - e_k) - a_mu x^(alpha - e_mu), so the solution is read off
    // the a_k coordinates.
    std::map<Monomial, std::vector<std::pair<unsigned, Rational>>, GrlexLess> by_multidegree;
    for (std::size_t i = 0; i < d; ++i)
        for (const auto &[m, c] : rest.a()[i].terms()) {
            Monomial alpha = m;
            alpha.set(i, alpha[i] + 1);
            by_multidegree[alpha].emplace_back(static_cast<unsigned>(i), c);
        }
    for (const auto &[alpha, coords] : by_multidegree) {
        unsigned mu = 0;
        while (alpha[mu] == 0)
            ++mu;
        for (const auto &[k, c] : coords) {
            if (k == mu)
                continue;
            Monomial tail_deg = alpha;
            tail_deg.set(k, tail_deg[k] - 1);
            tail_deg.set(mu, tail_deg[mu] - 1);
            std::vector<unsigned> tail;
            for (std::size_t v = 0; v < d; ++v)
                for (Exponent r = 0; r < tail_deg[v]; ++r)
                    tail.push_back(static_cast<unsigned>(v));
            out.add_term(LieMonomial(d, k, mu, std::move(tail)), c);
        }
    }
    return out;
}

std::vector<LieMonomial> basis_slice(const Monomial &alpha) {
    std::vector<LieMonomial> out;
    const std::size_t d = alpha.arity();
    if (alpha.degree() < 2)
        return out;
    unsigned mu = 0;
    while (alpha[mu] == 0)
        ++mu;
    for (unsigned k = mu + 1; k < d; ++k) {
        if (alpha[k] == 0)
            continue;
        std::vector<unsigned> tail;
        for (unsigned v = 0; v < d; ++v) {
            Exponent e = alpha[v] - (v == k ? 1 : 0) - (v == mu ? 1 : 0);
            for (Exponent r = 0; r < e; ++r)
                tail.push_back(v);
        }
        out.emplace_back(d, k, mu, std::move(tail));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void for_each_multidegree(std::size_t arity, std::size_t degree, Monomial &current, std::size_t index,
                          std::size_t remaining, std::vector<Monomial> &out) {
    if (index + 1 == arity) {
        current.set(index, static_cast<Exponent>(remaining));
        out.push_back(current);
        return;
    }
    for (std::size_t e = 0; e <= remaining; ++e) {
        current.set(index, static_cast<Exponent>(e));
        for_each_multidegree(arity, degree, current, index + 1, remaining - e, out);
    }
    current.set(index, 0);
}

} // namespace

std::vector<LieMonomial> basis_slice(std::size_t arity, std::size_t degree) {
    std::vector<LieMonomial> out;
    if (degree < 2 || arity < 2)
        return out;
    std::vector<Monomial> multidegrees;
    Monomial current(arity);
    for_each_multidegree(arity, degree, current, 0, degree, multidegrees);
    for (const auto &alpha : multidegrees) {
        auto part = basis_slice(alpha);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wdk
