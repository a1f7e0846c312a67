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

#include "wdk/io.hpp"

#include <stdexcept>
#include <string>

namespace wdk::io {

json to_json(const Polynomial &p) {
    json out = json::array();
    for (const auto &[m, c] : p.terms()) {
        json exps = json::array();
        for (auto e : m.exponents())
            exps.push_back(e);
        out.push_back(json::array({c.to_string(), std::move(exps)}));
    }
    return out;
}

Polynomial polynomial_from_json(const json &j, std::size_t arity) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    Polynomial p(arity);
    for (const auto &term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array())
            throw std::invalid_argument("polynomial term must be [coeff, exponents]");
        if (term[1].size() != arity)
            throw std::invalid_argument("polynomial term has " + std::to_string(term[1].size()) +
                                        " exponents, expected " + std::to_string(arity));
        std::vector<Exponent> exps;
        for (const auto &e : term[1])
            exps.push_back(e.get<Exponent>());
        p.add_term(Monomial(std::move(exps)), Rational::parse(term[0].get<std::string>()));
    }
    return p;
}

json bigraded_series_json(const Polynomial &series) {
    if (series.arity() != 3)
        throw std::invalid_argument("bigraded series must have variables t1, t2, z");
    json out = json::array();
    for (const auto &[m, c] : series.terms())
        out.push_back({{"coeff", c.to_string()}, {"t1", m[0]}, {"t2", m[1]}, {"z", m[2]}});
    return out;
}

json graded_series_json(const Polynomial &series) {
    if (series.arity() != 1)
        throw std::invalid_argument("graded series must have the single variable z");
    json out = json::array();
    for (const auto &[m, c] : series.terms())
        out.push_back({{"coeff", c.to_string()}, {"z", m[0]}});
    return out;
}

json to_json(const LieElement &e) {
    json linear = json::array();
    for (const auto &c : e.linear())
        linear.push_back(c.to_string());
    json terms = json::array();
    for (const auto &[m, c] : e.terms()) {
        json word = json::array();
        for (auto i : m.word())
            word.push_back(i + 1);
        terms.push_back({{"coeff", c.to_string()}, {"word", std::move(word)}});
    }
    return {{"linear", std::move(linear)}, {"terms", std::move(terms)}};
}

LieElement lie_from_json(const json &j, std::size_t arity) {
    if (!j.is_object())
        throw std::invalid_argument("Lie element JSON must be an object");
    LieElement e(arity);
    if (j.contains("linear")) {
        const auto &linear = j.at("linear");
        if (!linear.is_array() || linear.size() > arity)
            throw std::invalid_argument("bad linear part");
        for (std::size_t i = 0; i < linear.size(); ++i)
            e.add_linear(static_cast<unsigned>(i), Rational::parse(linear[i].get<std::string>()));
    }
    if (j.contains("terms"))
        for (const auto &t : j.at("terms")) {
            std::vector<unsigned> word;
            for (const auto &w : t.at("word")) {
                const auto v = w.get<unsigned>();
                if (v == 0 || v > arity)
                    throw std::invalid_argument("word index out of range");
                word.push_back(v - 1);
            }
            e += LieElement::from_word(arity, word) * Rational::parse(t.at("coeff").get<std::string>());
        }
    return e;
}

json to_json(const ModuleGenerator &g) {
    json out = to_json(g.element);
    out["text"] = g.element.to_string();
    out["bidegree"] = {g.bidegree.first, g.bidegree.second};
    out["degree"] = g.degree;
    return out;
}

json to_json(const Relation &r) {
    json lhs = json::array();
    for (const auto &u : r.coefficients)
        lhs.push_back(to_json(u));
    return {{"lhs", std::move(lhs)},
            {"text", r.to_string()},
            {"degree", r.degree},
            {"bidegree", {r.bidegree.first, r.bidegree.second}}};
}

json to_json(const GeneratorSet &gens, const std::vector<Relation> &relations) {
    json algebra = json::array();
    json algebra_text = json::array();
    for (const auto &f : gens.algebra) {
        algebra.push_back(to_json(f));
        algebra_text.push_back(f.to_string());
    }
    json module = json::array();
    for (const auto &g : gens.module)
        module.push_back(to_json(g));
    json rels = json::array();
    for (const auto &r : relations) {
        json jr = to_json(r);
        jr["certified_zero"] = verify_relation(r, gens);
        rels.push_back(std::move(jr));
    }
    return {{"partition", gens.partition.cells()},
            {"arity", gens.partition.arity()},
            {"algebra", std::move(algebra)},
            {"algebra_text", std::move(algebra_text)},
            {"module", std::move(module)},
            {"relations", std::move(rels)}};
}

} // namespace wdk::io
