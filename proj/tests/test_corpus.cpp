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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "random_inputs.hpp"
#include "wdk/corpus.hpp"
#include "wdk/io.hpp"
#include "wdk/omega.hpp"

using namespace wdk;

namespace {

corpus::json load(const std::string &id) {
    std::ifstream in(corpus::default_dir() / (id + ".json"));
    REQUIRE(in.good());
    return corpus::json::parse(in);
}

bool check_passed(const corpus::Report &r, const std::string &prefix) {
    bool seen = false;
    for (const auto &c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) {
            seen = true;
            if (!c.passed)
                return false;
        }
    return seen;
}

} // namespace

TEST_CASE("json round trips") {
    testing::Random rnd(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(rnd.integer(0, 5));
        const Polynomial p = rnd.polynomial(d, 4, 6);
        CHECK(io::polynomial_from_json(corpus::json::parse(io::to_json(p).dump()), d) == p);
        const std::size_t k = 2 + static_cast<std::size_t>(rnd.integer(0, 4));
        const LieElement e = rnd.lie_element(k);
        CHECK(io::lie_from_json(corpus::json::parse(io::to_json(e).dump()), k) == e);
    }
    CHECK_THROWS(io::polynomial_from_json(corpus::json::parse(R"([["1",[1,0]]])"), 3));
}

TEST_CASE("series forms") {
    for (const auto &entry : corpus::series_table()) {
        const auto back = corpus::SeriesForm::from_json(entry.graded.to_json());
        CHECK(back.to_string() == entry.graded.to_string());
        CHECK(back.value() == entry.graded.value());
    }
    CHECK(corpus::series_table().size() == 10);
}

TEST_CASE("examples") {
    CHECK(corpus::example_ids() == std::vector<std::string>{"3.4", "4.5", "5.1", "5.2", "5.3", "5.4"});
    CHECK_THROWS_AS(corpus::module_example("9.9"), corpus::UnknownExample);
    CHECK_THROWS_AS(corpus::verify_example("9.9", corpus::default_dir()), corpus::UnknownExample);
    CHECK_THROWS_AS(corpus::verify_example("5.3", "/nonexistent"), std::runtime_error);
    const auto &ex = corpus::module_example("5.4");
    const auto gens = corpus::generator_set(ex);
    const auto rels = corpus::relations(ex, gens);
    CHECK(gens.module.size() == 10);
    CHECK(rels.size() == 21);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        CHECK(verify_relation(rels[i], gens));
        CHECK(rels[i].bidegree == ex.relation_bidegrees[i]);
    }
}

TEST_CASE("shipped corpus verifies") {
    for (const auto &id : corpus::example_ids()) {
        const auto report = corpus::verify_example(id, corpus::default_dir());
        INFO(id);
        CHECK(report.passed());
        CHECK(report.first_failure() == nullptr);
        CHECK_FALSE(report.checks.empty());
    }
}

TEST_CASE("shipped corpus matches a rebuild") {
    for (const auto &id : corpus::example_ids()) {
        INFO(id);
        CHECK(corpus::dump(corpus::build(id)) == corpus::dump(load(id)));
    }
}

TEST_CASE("tampered files fail") {
    {
        auto j = load("5.3");
        j["kernel_dimensions"][3] = "16";
        const auto r = corpus::verify(j);
        CHECK_FALSE(r.passed());
        REQUIRE(r.first_failure() != nullptr);
    }
    {
        auto j = load("5.3");
        j["generators"]["module"][3]["terms"][0]["coeff"] = "1";
        CHECK_FALSE(corpus::verify(j).passed());
    }
    {
        auto j = load("3.4");
        j["entries"][1]["graded_form"]["numerator"] = "z^3";
        CHECK_FALSE(corpus::verify(j).passed());
    }
    {
        auto j = load("5.2");
        j["discovery"]["generator_count"] = 3;
        CHECK_FALSE(corpus::verify(j).passed());
    }
    const auto good = corpus::verify(load("4.5"));
    CHECK(check_passed(good, "trivial cell series identity"));
}

TEST_CASE("trivial cell identity") {
    const auto [lhs, rhs] = corpus::trivial_cell_identity(10);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.is_zero());
}
