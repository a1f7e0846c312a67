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

// Reference corpus: hand-transcribed series, generators and relations for
// the worked examples, the values re-derived from them, and the checks run
// by "wdk verify".

#ifndef WDK_CORPUS_HPP
#define WDK_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wdk/constants.hpp"
#include "wdk/io.hpp"
#include "wdk/nice_rational.hpp"

namespace wdk::corpus {

using io::json;

class UnknownExample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// head + numerator / prod (1 - m)^k over the given variable names.
struct SeriesForm {
    std::vector<std::string> variables;
    std::string head;
    std::string numerator;
    std::vector<std::pair<std::string, unsigned>> denominator;

    NiceRational value() const;
    std::string to_string() const;
    json to_json() const;
    static SeriesForm from_json(const json &j);
};

struct SeriesEntry {
    std::vector<unsigned> cells;
    SeriesForm graded;
    std::optional<SeriesForm> bigraded;
};

struct ModuleExample {
    std::string id;
    std::vector<unsigned> cells;
    std::vector<std::string> algebra;
    std::vector<std::string> module;
    std::vector<std::string> relations;
    /// Bidegrees printed next to the relations, when the source gives them.
    std::vector<Bidegree> relation_bidegrees;
};

/// Degree bound used throughout: 8 for d <= 5, 6 beyond.
std::size_t default_max_degree(std::size_t arity);

const std::vector<SeriesEntry> &series_table();
const std::vector<ModuleExample> &module_examples();
/// "3.4", "4.5", "5.1", "5.2", "5.3", "5.4".
std::vector<std::string> example_ids();
/// Throws UnknownExample.
const ModuleExample &module_example(std::string_view id);

GeneratorSet generator_set(const ModuleExample &ex);
std::vector<Relation> relations(const ModuleExample &ex, const GeneratorSet &gens);

/// Graded series of the commutator-ideal constants of delta(2,0), and the
/// right-hand side built from delta(2) and its polynomial constants, to z^order.
std::pair<Polynomial, Polynomial> trivial_cell_identity(std::uint64_t order);

/// Corpus file for one example: transcribed values plus derived ones.
json build(std::string_view id);
/// Writes <dir>/<id>.json for every example.
void rebuild(const std::filesystem::path &dir);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string id;
    std::vector<Check> checks;

    bool passed() const;
    const Check *first_failure() const;
    json to_json() const;
};

/// Re-derives every value of a corpus file and compares.
Report verify(const json &file);
/// Throws UnknownExample for an unknown id, std::runtime_error when unreadable.
Report verify_example(std::string_view id, const std::filesystem::path &dir);

/// Location of the shipped corpus.
std::filesystem::path default_dir();

/// Stable two-space JSON rendering with a trailing newline.
std::string dump(const json &j);

} // namespace wdk::corpus

#endif // WDK_CORPUS_HPP
