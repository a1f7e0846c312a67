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

#include "wdk/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "wdk/omega.hpp"

#ifndef WDK_CORPUS_DIR
#define WDK_CORPUS_DIR "corpus"
#endif

namespace wdk::corpus {

namespace {

const std::vector<std::string> kZ = {"z"};
const std::vector<std::string> kTZ = {"t1", "t2", "z"};

SeriesForm graded(std::string head, std::string numerator, std::vector<std::pair<std::string, unsigned>> den) {
    return {kZ, std::move(head), std::move(numerator), std::move(den)};
}

SeriesForm bigraded(std::string head, std::string numerator, std::vector<std::pair<std::string, unsigned>> den) {
    return {kTZ, std::move(head), std::move(numerator), std::move(den)};
}

Monomial single_monomial(const Polynomial &p, const std::string &text) {
    if (p.size() != 1 || !p.terms().begin()->second.is_one())
        throw std::invalid_argument("denominator entry '" + text + "' is not a monomial");
    return p.terms().begin()->first;
}

/// Terms with positive z-degree.
Polynomial positive_z(const Polynomial &p) {
    const std::size_t z = p.arity() - 1;
    Polynomial out(p.arity());
    for (const auto &[m, c] : p.terms())
        if (m[z] > 0)
            out.add_term(m, c);
    return out;
}

std::vector<std::string> coefficient_list(const Polynomial &series, std::uint64_t max_degree) {
    std::vector<std::string> out;
    for (std::uint64_t n = 1; n <= max_degree; ++n)
        out.push_back(series.coefficient(Monomial({static_cast<Exponent>(n)})).to_string());
    return out;
}

std::vector<std::string> dims_list(const std::vector<std::size_t> &dims) {
    std::vector<std::string> out;
    for (auto d : dims)
        out.push_back(std::to_string(d));
    return out;
}

Polynomial bigraded_oracle(const Partition &partition, std::uint64_t order) {
    const auto h = gl2_substitute(hilbert_free_metabelian(partition.arity()), partition);
    return positive_z(multiplicity_series_truncated(h, order).terms());
}

std::vector<Bidegree> bidegrees(std::initializer_list<std::pair<unsigned, unsigned>> list) {
    std::vector<Bidegree> out;
    for (const auto &[a, b] : list)
        out.push_back({a, b});
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Series forms

NiceRational SeriesForm::value() const {
    const std::size_t arity = variables.size();
    NiceRational::Denominator den;
    for (const auto &[text, k] : denominator)
        den[single_monomial(Polynomial::parse(text, arity, variables), text)] += k;
    const NiceRational head_part(Polynomial::parse(head.empty() ? "0" : head, arity, variables));
    return head_part + NiceRational(Polynomial::parse(numerator, arity, variables), den);
}

std::string SeriesForm::to_string() const {
    std::string den;
    for (const auto &[m, k] : denominator) {
        den += "(1-" + m + ")";
        if (k > 1)
            den += "^" + std::to_string(k);
    }
    std::string out = head.empty() ? "" : head + " + ";
    out += "(" + numerator + ")";
    if (!den.empty())
        out += "/(" + den + ")";
    return out;
}

json SeriesForm::to_json() const {
    json den = json::array();
    for (const auto &[m, k] : denominator)
        den.push_back(json::array({m, k}));
    return {{"variables", variables}, {"head", head}, {"numerator", numerator}, {"denominator", std::move(den)}};
}

SeriesForm SeriesForm::from_json(const json &j) {
    SeriesForm f;
    f.variables = j.at("variables").get<std::vector<std::string>>();
    f.head = j.at("head").get<std::string>();
    f.numerator = j.at("numerator").get<std::string>();
    for (const auto &e : j.at("denominator"))
        f.denominator.emplace_back(e.at(0).get<std::string>(), e.at(1).get<unsigned>());
    return f;
}

std::size_t default_max_degree(std::size_t arity) { return arity <= 5 ? 8 : 6; }

// ---------------------------------------------------------------------------
// Transcribed tables

const std::vector<SeriesEntry> &series_table() {
    static const std::vector<SeriesEntry> table = {
        {{1},
         graded("z", "z^2", {{"z", 1}}),
         bigraded("t1*z", "t1*t2*z^2", {{"t1*z", 1}})},
        {{2},
         graded("z", "z^2", {{"z", 2}}),
         bigraded("t1^2*z", "t1^3*t2*z^2", {{"t1^2*z", 1}, {"t1*t2*z", 1}})},
        {{3},
         graded("z", "z^2*(2+z^2+z^3-z^4)", {{"z", 2}, {"z^4", 1}}),
         bigraded("t1^3*z", "t1^3*t2*z^2*(t1^2+t2^2+t1^4*t2^4*z^2+t1^5*t2^6*z^3-t1^8*t2^6*z^4)",
                  {{"t1^3*z", 1}, {"t1^2*t2*z", 1}, {"t1^6*t2^6*z^4", 1}})},
        {{1, 1},
         graded("2*z", "z^2*(4-z^2)", {{"z", 2}, {"z^2", 1}}),
         bigraded("2*t1*z", "t1*z^2*(t1+3*t2-t1^2*t2*z^2)", {{"t1*z", 2}, {"t1*t2*z^2", 1}})},
        {{4},
         graded("z", "z^2*(2+2*z+z^2-2*z^4+z^5)", {{"z", 2}, {"z^2", 1}, {"z^3", 1}}),
         std::nullopt},
        {{2, 1},
         graded("2*z", "z^2*(4+2*z^2-3*z^3+z^4)", {{"z", 3}, {"z^3", 1}}),
         std::nullopt},
        {{5},
         graded("z",
                "z^2*(3+3*z+7*z^2+10*z^3+11*z^4+14*z^5+13*z^6+16*z^7+12*z^8+8*z^9+10*z^10+3*z^11+5*z^12"
                "-z^13+z^14-z^16+2*z^17-z^18)",
                {{"z", 2}, {"z^4", 1}, {"z^6", 1}, {"z^8", 1}}),
         std::nullopt},
        {{3, 1},
         graded("2*z", "z^2*(5+6*z+8*z^2+11*z^3+5*z^4-2*z^5+3*z^6-2*z^7+2*z^9-z^10)",
                {{"z", 2}, {"z^2", 1}, {"z^4", 2}}),
         std::nullopt},
        {{2, 2},
         graded("2*z", "z^2*(5+8*z-6*z^3+2*z^4+2*z^5-z^6)", {{"z", 2}, {"z^2", 3}}),
         std::nullopt},
        {{1, 1, 1},
         graded("3*z", "z^2*(9+9*z-6*z^3+2*z^4+2*z^5-z^6)", {{"z", 2}, {"z^2", 3}}),
         bigraded("3*t1*z",
                  "t1*z^2*(3*(t1+2*t2)+t1*(-t1+t2)*z-9*t1^2*t2*z^2+3*t1^2*t2*(-3*t2+t1)*z^3"
                  "+t1^2*t2^2*(9*t1-t2)*z^4+3*t1^3*t2^2*(t2-t1)*z^5-3*t1^4*t2^3*z^6+t1^5*t2^3*z^7)",
                  {{"t1*z", 3}, {"t1*t2*z^2", 3}})},
    };
    return table;
}

const std::vector<ModuleExample> &module_examples() {
    static const std::vector<ModuleExample> examples = {
        {"4.5",
         {2, 0},
         {"x1", "x2^2-2*x1*x3", "x4"},
         {"[x2,x1]", "[x3,x1,x1]-[x2,x1,x2]", "[x4,x1]", "2([x4,x2,x2]-[x4,x1,x3]-[x4,x3,x1])"},
         {},
         {}},
        {"5.1", {2}, {"x1", "x2^2-2*x1*x3"}, {"[x2,x1]", "[x3,x1,x1]-[x2,x1,x2]"}, {}, {}},
        {"5.2",
         {3},
         {"x1", "x2^2-2*x1*x3", "x2^3-3*x1*x2*x3+3*x1^2*x4",
          "x2^2*x3^2-2*x2^3*x4+6*x1*x2*x3*x4-8/3*x1*x3^3-3*x1^2*x4^2"},
         {"[x2,x1]",
          "[x4,x1]-[x3,x2]",
          "[x3,x1,x1]-[x2,x1,x2]",
          "3[x2,x1,x4]-2[x3,x1,x3]+[x3,x2,x2]",
          "3(-[x3,x1,x1,x4]+[x2,x1,x2,x4]+[x3,x1,x2,x3])-4[x2,x1,x3,x3]-[x3,x2,x2,x2]",
          "-9[x2,x1,x1,x4,x4]+18[x3,x1,x1,x3,x4]-12[x4,x1,x1,x3,x3]-9[x3,x1,x2,x2,x4]+12[x4,x1,x2,x2,x3]"
          "+4[x2,x1,x3,x3,x3]-6[x3,x1,x2,x3,x3]-3[x4,x2,x2,x2,x2]+3[x3,x2,x2,x2,x3]",
          "-18[x3,x1,x1,x1,x4,x4]+18[x4,x1,x1,x1,x3,x4]+18[x2,x1,x1,x2,x4,x4]-9[x4,x1,x1,x2,x2,x4]"
          "-18[x2,x1,x1,x3,x3,x4]+18[x3,x1,x1,x2,x3,x4]-18[x4,x1,x1,x2,x3,x3]+8[x3,x1,x1,x3,x3,x3]"
          "-9[x2,x1,x2,x2,x3,x4]-3[x3,x1,x2,x2,x2,x4]+15[x4,x1,x2,x2,x2,x3]+10[x2,x1,x2,x3,x3,x3]"
          "-12[x3,x1,x2,x2,x3,x3]-3[x4,x2,x2,x2,x2,x2]+3[x3,x2,x2,x2,x2,x3]"},
         {"c1*f3 - (-c3*f2 + c4*f1^2)",
          "c3*f3 + (c1*f2^2 + c5*f1^2)",
          "c4*f3 + (3*c1*f4 + c5*f2)",
          "c6*f1 - 3*(c1*f4 - c2*f2^2 + c5*f2)",
          "c5*f3 - (3*c3*f4 - c4*f2^2)",
          "c7*f1 - 3*(-c2*f2*f3 + 2*c3*f4 - c4*f2^2)",
          "c6*f3 - (3*c4*f1*f4 + c7*f2)",
          "c7*f3 - (9*c2*f1*f2*f4 - 6*c5*f1*f4 + c6*f2^2)"},
         bidegrees({{11, 4}, {13, 5}, {11, 7}, {11, 7}, {13, 8}, {13, 8}, {14, 10}, {16, 11}})},
        {"5.3",
         {1, 1},
         {"x1", "x3", "x1*x4-x2*x3"},
         {"[x3,x1]", "[x2,x1]", "[x4,x3]", "[x4,x1]-[x3,x2]"},
         {"c1*f3 + c2*f2^2 + c3*f1^2 - c4*f1*f2"},
         {}},
        {"5.4",
         {1, 1, 1},
         {"x1", "x3", "x5", "x1*x4-x2*x3", "x1*x6-x2*x5", "x3*x6-x4*x5"},
         {"[x3,x1]", "[x5,x1]", "[x5,x3]", "[x2,x1]", "[x4,x3]", "[x6,x5]", "[x4,x1]-[x3,x2]",
          "[x6,x1]-[x5,x2]", "[x6,x3]-[x5,x4]", "[x3,x2,x5]-[x5,x2,x3]-[x4,x1,x5]+[x5,x1,x4]"},
         {"c3*f1 - (-c1*f3 + c2*f2)",
          "c1*f4 - (-c4*f2^2 - c5*f1^2 + c7*f1*f2)",
          "c1*f5 - (-c2*f4 - 2*c4*f2*f3 + c7*f1*f3 + c8*f1*f2 - c9*f1^2)",
          "c3*f4 - (-c1*f6 + 2*c5*f1*f3 - c7*f2*f3 + c8*f2^2 - c9*f1*f2)",
          "c3*f5 - (-c2*f6 - 2*c6*f1*f2 - c7*f3^2 + c8*f2*f3 + c9*f1*f3)",
          "c3*f6 - (-c5*f3^2 - c6*f2^2 + c9*f2*f3)",
          "c2*f5 - (-c4*f3^2 - c6*f1^2 + c8*f1*f3)",
          "c10*f1 - (-c1*f5 - c4*f2*f3 + c8*f1*f2 - c9*f1^2)",
          "c10*f2 - (-c1*f6 + c5*f1*f3 - c7*f2*f3 + c8*f2^2 - c9*f1*f2)",
          "c10*f3 - (-c2*f6 - c6*f1*f2 - c7*f3^2 + c8*f2*f3)",
          "c1*f1*f6 - (-c2*f2*f4 - c4*f2^2*f3 + c5*f1^2*f3 + c8*f1*f2^2 - c9*f1^2*f2)",
          "c1*f3*f6 - (c2*f2*f6 + c5*f1*f3^2 + c6*f1*f2^2 - c9*f1*f2*f3)",
          "c2*f1*f6 - (-c2*f3*f4 - c4*f2*f3^2 - c6*f1^2*f2 + c8*f1*f2*f3)",
          "c10*f4 - (c4*f2*f6 + c5*f1*f5 - c7*(f1*f6 + f3*f4) + c8*f2*f4 - c9*f1*f4)",
          "c10*f5 - (c4*f3*f6 - c6*f1*f4 - c7*f3*f5 + c8*f3*f4)",
          "c10*f6 - (-c5*f3*f5 - c6*f2*f4 + c9*f3*f4)",
          "c1*f6^2 - (c5*f3*(f3*f4 + 2*f1*f6) + c6*f2^2*f4 - c7*f2*f3*f6 + c8*f2^2*f6 - c9*f2*(f3*f4 + f1*f6))",
          "c2*f4^2 - (c4*f2*(-f3*f4 + f1*f6) + c5*f1^2*f5 - c7*f1^2*f6 + c8*f1*f2*f4 - c9*f1^2*f4)",
          "c2*f4*f6 - (-c4*f2*f3*f6 - c5*f1*f3*f5 - c6*f1*f2*f4 + c7*f1*f3*f6 + c9*f1*f3*f4)",
          "c2*f6^2 - (c5*f3^2*f5 + c6*f2*(f3*f4 - f1*f6) - c7*f3^2*f6 + c8*f2*f3*f6 - c9*f3^2*f4)",
          "c4*f6^2 - (-c5*f5^2 - c6*f4^2 + c7*f5*f6 - c8*f4*f6 + c9*f4*f5)"},
         bidegrees({{3, 0}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {4, 1},
                    {4, 1}, {4, 1}, {3, 2}, {3, 2}, {3, 2}, {4, 2}, {4, 2}, {4, 2}, {4, 2}, {3, 3}})},
    };
    return examples;
}

std::vector<std::string> example_ids() { return {"3.4", "4.5", "5.1", "5.2", "5.3", "5.4"}; }

const ModuleExample &module_example(std::string_view id) {
    for (const auto &ex : module_examples())
        if (ex.id == id)
            return ex;
    throw UnknownExample("unknown corpus id '" + std::string(id) + "'");
}

GeneratorSet generator_set(const ModuleExample &ex) {
    const Partition partition(ex.cells);
    const std::size_t d = partition.arity();
    const auto names = default_names(d);
    GeneratorSet gens{partition, {}, {}};
    for (const auto &f : ex.algebra)
        gens.algebra.push_back(Polynomial::parse(f, d, names));
    for (const auto &c : ex.module)
        gens.module.push_back(make_generator(partition, LieElement::parse(c, d)));
    return gens;
}

std::vector<Relation> relations(const ModuleExample &ex, const GeneratorSet &gens) {
    std::vector<Relation> out;
    for (const auto &text : ex.relations) {
        Relation r = Relation::parse(text, gens.module.size(), gens.algebra.size());
        assign_grading(r, gens);
        out.push_back(std::move(r));
    }
    return out;
}

std::pair<Polynomial, Polynomial> trivial_cell_identity(std::uint64_t order) {
    const Partition lifted({2, 0});
    const Partition base({2});
    const auto graded = [&](const NiceRational &h, const Partition &p) {
        return TruncatedSeries(specialize_t(multiplicity_series_truncated(gl2_substitute(h, p), order).terms()),
                               order);
    };
    const auto lhs = graded(hilbert_free_metabelian(4, true), lifted);
    const auto commutator3 = graded(hilbert_free_metabelian(3, true), base);
    const auto poly3 = graded(hilbert_polynomial_ring(3), base);
    const TruncatedSeries one(Polynomial(1, Rational(1)), order);
    const TruncatedSeries z(Polynomial(Monomial({1})), order);
    const auto geometric = NiceRational::geometric(Monomial({1})).expand(order);
    const auto rhs = geometric * commutator3 + z * geometric * (poly3 - one);
    // The commutator series has no constant term; drop the 1 of the free algebra.
    return {positive_z(lhs.terms()), positive_z(rhs.terms())};
}

// ---------------------------------------------------------------------------
// Building

namespace {

json build_series() {
    json entries = json::array();
    for (const auto &entry : series_table()) {
        const Partition partition(entry.cells);
        const Derivation delta(partition);
        const std::size_t n = default_max_degree(partition.arity());
        json e = {{"partition", entry.cells},
                  {"arity", partition.arity()},
                  {"max_degree", n},
                  {"graded_form", entry.graded.to_json()},
                  {"graded_text", entry.graded.to_string()},
                  {"graded_expansion", coefficient_list(entry.graded.value().expand(n).terms(), n)},
                  {"kernel_dimensions", dims_list(kernel_dimensions(delta, Space::whole_lie, n))}};
        if (entry.bigraded) {
            e["bigraded_form"] = entry.bigraded->to_json();
            e["bigraded_text"] = entry.bigraded->to_string();
            e["bigraded_expansion"] =
                io::bigraded_series_json(entry.bigraded->value().expand(n, z_grading()).terms());
            e["bigraded_oracle"] = io::bigraded_series_json(bigraded_oracle(partition, n));
            e["bigraded_kernel"] =
                io::bigraded_series_json(bigraded_series(bigraded_kernel_dimensions(delta, Space::whole_lie, n)));
        }
        entries.push_back(std::move(e));
    }
    return {{"id", "3.4"}, {"entries", std::move(entries)}};
}

json discovery_json(const Derivation &delta, const std::vector<Polynomial> &algebra, std::size_t n) {
    const auto found = module_generators(delta, algebra, n);
    json bidegs = json::array();
    for (const auto &g : found.generators.module)
        bidegs.push_back({g.bidegree.first, g.bidegree.second});
    return {{"generator_count", found.generators.module.size()},
            {"bidegrees", std::move(bidegs)},
            {"relation_count", found.relations.size()}};
}

json span_json(const SpanReport &report) {
    json out = json::array();
    for (const auto &s : report.slices)
        out.push_back({{"slice", s.key.to_string()},
                       {"kernel_dimension", s.kernel_dimension},
                       {"span_rank", s.span_rank}});
    return out;
}

json build_module(const ModuleExample &ex) {
    const GeneratorSet gens = generator_set(ex);
    const auto rels = relations(ex, gens);
    const Derivation delta(gens.partition);
    const std::size_t n = default_max_degree(gens.partition.arity());
    json g = io::to_json(gens, rels);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        g["relations"][i]["name"] = "R" + std::to_string(i + 1);
        if (i < ex.relation_bidegrees.size())
            g["relations"][i]["declared_bidegree"] = {ex.relation_bidegrees[i].first,
                                                      ex.relation_bidegrees[i].second};
    }
    json out = {{"id", ex.id},
                {"partition", ex.cells},
                {"arity", gens.partition.arity()},
                {"max_degree", n},
                {"generators", std::move(g)},
                {"kernel_dimensions", dims_list(kernel_dimensions(delta, Space::commutator, n))},
                {"span", span_json(check_generation(delta, gens, n))},
                {"discovery", discovery_json(delta, gens.algebra, n)}};
    if (ex.id == "4.5") {
        const auto lower = generator_set(module_example("5.1"));
        const auto lifted = lift_generators(delta, lower);
        json module = json::array();
        for (const auto &c : lifted.module)
            module.push_back(io::to_json(c));
        const auto [lhs, rhs] = trivial_cell_identity(12);
        out["lift"] = {{"from", "5.1"}, {"module", std::move(module)}};
        out["identity"] = {{"order", 12},
                           {"lhs", coefficient_list(lhs, 12)},
                           {"rhs", coefficient_list(rhs, 12)}};
    }
    return out;
}

} // namespace

json build(std::string_view id) {
    if (id == "3.4")
        return build_series();
    return build_module(module_example(id));
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

void rebuild(const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    for (const auto &id : example_ids()) {
        std::ofstream out(dir / (id + ".json"), std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + (dir / (id + ".json")).string());
        out << dump(build(id));
    }
}

std::filesystem::path default_dir() { return WDK_CORPUS_DIR; }

// ---------------------------------------------------------------------------
// Verification

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

const Check *Report::first_failure() const {
    for (const auto &c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

json Report::to_json() const {
    json list = json::array();
    for (const auto &c : checks)
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"id", id}, {"passed", passed()}, {"checks", std::move(list)}};
}

namespace {

class Checker {
public:
    explicit Checker(Report &report) : report_(report) {}

    void add(std::string name, bool passed, std::string detail = {}) {
        report_.checks.push_back({std::move(name), passed, std::move(detail)});
    }

    /// Runs fn, recording an exception as a failed check.
    template <typename Fn> void guarded(const std::string &name, Fn &&fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            add(name, false, e.what());
        }
    }

private:
    Report &report_;
};

std::string joined(const std::vector<std::string> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + v[i];
    return out;
}

void verify_series(const json &file, Checker &check) {
    for (const auto &e : file.at("entries")) {
        const Partition partition(e.at("partition").get<std::vector<unsigned>>());
        const std::string label = partition.to_string();
        const Derivation delta(partition);
        const std::size_t n = e.at("max_degree").get<std::size_t>();
        check.guarded("graded " + label, [&] {
            const auto form = SeriesForm::from_json(e.at("graded_form"));
            const auto expansion = coefficient_list(form.value().expand(n).terms(), n);
            const auto dims = dims_list(kernel_dimensions(delta, Space::whole_lie, n));
            const auto stored = e.at("graded_expansion").get<std::vector<std::string>>();
            const auto stored_dims = e.at("kernel_dimensions").get<std::vector<std::string>>();
            const bool ok = expansion == dims && expansion == stored && dims == stored_dims;
            check.add("graded " + label, ok, "form [" + joined(expansion) + "] kernel [" + joined(dims) + "]");
        });
        if (!e.contains("bigraded_form"))
            continue;
        check.guarded("bigraded " + label, [&] {
            const auto form = SeriesForm::from_json(e.at("bigraded_form"));
            const auto expansion = form.value().expand(n, z_grading()).terms();
            const auto oracle = bigraded_oracle(partition, n);
            const auto kernel = bigraded_series(bigraded_kernel_dimensions(delta, Space::whole_lie, n));
            check.add("bigraded " + label + " form vs oracle", expansion == oracle,
                      expansion == oracle ? "" : "difference " + (expansion - oracle).to_string(series_names()));
            check.add("bigraded " + label + " form vs kernel", expansion == kernel,
                      expansion == kernel ? "" : "difference " + (expansion - kernel).to_string(series_names()));
            const bool stored = io::bigraded_series_json(expansion) == e.at("bigraded_expansion") &&
                                io::bigraded_series_json(oracle) == e.at("bigraded_oracle") &&
                                io::bigraded_series_json(kernel) == e.at("bigraded_kernel");
            check.add("bigraded " + label + " stored values", stored);
        });
    }
}

void verify_module(const json &file, Checker &check) {
    const Partition partition(file.at("partition").get<std::vector<unsigned>>());
    const std::size_t d = partition.arity();
    const std::size_t n = file.at("max_degree").get<std::size_t>();
    const Derivation delta(partition);
    const json &g = file.at("generators");

    GeneratorSet gens{partition, {}, {}};
    for (const auto &f : g.at("algebra"))
        gens.algebra.push_back(io::polynomial_from_json(f, d));
    std::vector<Bidegree> stored_bidegrees;
    for (const auto &c : g.at("module")) {
        gens.module.push_back(make_generator(partition, io::lie_from_json(c, d)));
        stored_bidegrees.push_back({c.at("bidegree").at(0).get<unsigned>(), c.at("bidegree").at(1).get<unsigned>()});
    }

    std::string bad;
    for (std::size_t j = 0; j < gens.algebra.size(); ++j)
        if (!delta.apply(gens.algebra[j]).is_zero())
            bad += " f" + std::to_string(j + 1);
    check.add("algebra generators are constants", bad.empty(), bad);

    bad.clear();
    std::string outside;
    std::string wrong_bidegree;
    for (std::size_t j = 0; j < gens.module.size(); ++j) {
        const auto &c = gens.module[j];
        if (!delta.apply(c.wreath).is_zero())
            bad += " c" + std::to_string(j + 1);
        if (!in_commutator_ideal(c.wreath))
            outside += " c" + std::to_string(j + 1);
        if (c.bidegree != stored_bidegrees[j])
            wrong_bidegree += " c" + std::to_string(j + 1);
    }
    check.add("module generators are constants", bad.empty(), bad);
    check.add("module generators lie in the commutator ideal", outside.empty(), outside);
    check.add("module generator bidegrees", wrong_bidegree.empty(), wrong_bidegree);

    const std::size_t k = gens.module.size();
    const std::size_t l = gens.algebra.size();
    for (const auto &jr : g.at("relations")) {
        const std::string name = "relation " + jr.value("name", std::string("?"));
        check.guarded(name, [&] {
            Relation r;
            for (const auto &u : jr.at("lhs"))
                r.coefficients.push_back(io::polynomial_from_json(u, l));
            if (r.coefficients.size() != k)
                throw std::invalid_argument("relation has " + std::to_string(r.coefficients.size()) +
                                            " coefficients for " + std::to_string(k) + " generators");
            const auto value = evaluate_relation(r, gens);
            check.add(name + " evaluates to zero", value.is_zero(), value.is_zero() ? "" : value.to_string());
            if (jr.contains("declared_bidegree")) {
                const Bidegree declared{jr.at("declared_bidegree").at(0).get<unsigned>(),
                                        jr.at("declared_bidegree").at(1).get<unsigned>()};
                const bool graded = assign_grading(r, gens);
                check.add(name + " bidegree " + declared.to_string(), graded && r.bidegree == declared,
                          graded ? "computed " + r.bidegree.to_string() : "not homogeneous");
            }
        });
    }

    const auto dims = dims_list(kernel_dimensions(delta, Space::commutator, n));
    check.add("commutator kernel dimensions to degree " + std::to_string(n),
              dims == file.at("kernel_dimensions").get<std::vector<std::string>>(), "[" + joined(dims) + "]");

    const auto report = check_generation(delta, gens, n);
    std::string detail;
    if (const auto f = report.first_failure())
        detail = "slice " + f->key.to_string() + ": span " + std::to_string(f->span_rank) + " of " +
                 std::to_string(f->kernel_dimension);
    check.add("span equals kernel to degree " + std::to_string(n),
              report.generates() && span_json(report) == file.at("span"), detail);

    const auto discovered = discovery_json(delta, gens.algebra, n);
    std::multiset<std::pair<unsigned, unsigned>> mine;
    std::multiset<std::pair<unsigned, unsigned>> theirs;
    for (const auto &c : gens.module)
        mine.emplace(c.bidegree.first, c.bidegree.second);
    for (const auto &b : discovered.at("bidegrees"))
        theirs.emplace(b.at(0).get<unsigned>(), b.at(1).get<unsigned>());
    check.add("blind discovery matches generator bidegrees", mine == theirs && discovered == file.at("discovery"),
              std::to_string(discovered.at("generator_count").get<std::size_t>()) + " generators found");

    if (file.contains("lift")) {
        const auto lower = generator_set(module_example(file.at("lift").at("from").get<std::string>()));
        const auto lifted = lift_generators(delta, lower);
        json module = json::array();
        for (const auto &c : lifted.module)
            module.push_back(io::to_json(c));
        check.add("lifted generators match", module == file.at("lift").at("module"));
        check.add("lifted generators span the kernel", check_generation(delta, lifted, n).generates());
    }
    if (file.contains("identity")) {
        const std::uint64_t order = file.at("identity").at("order").get<std::uint64_t>();
        const auto [lhs, rhs] = trivial_cell_identity(order);
        const auto l_list = coefficient_list(lhs, order);
        const auto r_list = coefficient_list(rhs, order);
        check.add("trivial cell series identity to z^" + std::to_string(order),
                  lhs == rhs && l_list == file.at("identity").at("lhs").get<std::vector<std::string>>(),
                  "[" + joined(l_list) + "] vs [" + joined(r_list) + "]");
        std::vector<std::string> from_series(l_list.begin(), l_list.begin() + static_cast<long>(n));
        check.add("commutator kernel agrees with the identity series", from_series == dims);
    }
}

} // namespace

Report verify(const json &file) {
    Report report;
    report.id = file.at("id").get<std::string>();
    Checker check(report);
    try {
        if (report.id == "3.4")
            verify_series(file, check);
        else
            verify_module(file, check);
    } catch (const std::exception &e) {
        check.add("corpus file readable", false, e.what());
    }
    return report;
}

Report verify_example(std::string_view id, const std::filesystem::path &dir) {
    const auto ids = example_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw UnknownExample("unknown corpus id '" + std::string(id) + "'");
    const auto path = dir / (std::string(id) + ".json");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    json file;
    try {
        file = json::parse(in);
    } catch (const json::exception &e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return verify(file);
}

} // namespace wdk::corpus
