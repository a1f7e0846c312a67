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

// JSON renderings of polynomials, series, Lie elements and generator sets.
// Rationals are strings, variable indices in words are 1-based.

#ifndef WDK_IO_HPP
#define WDK_IO_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "wdk/constants.hpp"
#include "wdk/metabelian.hpp"
#include "wdk/polynomial.hpp"

namespace wdk::io {

using nlohmann::json;

/// [[coeff, [e1, ..., ed]], ...] in ascending canonical order.
json to_json(const Polynomial &p);
/// Throws std::invalid_argument on malformed input or wrong arity.
Polynomial polynomial_from_json(const json &j, std::size_t arity);

/// [{"coeff", "t1", "t2", "z"}, ...] for a series in (t1, t2, z).
json bigraded_series_json(const Polynomial &series);
/// [{"coeff", "z"}, ...] for a series in one variable.
json graded_series_json(const Polynomial &series);

/// {"linear": [...], "terms": [{"coeff", "word"}]}.
json to_json(const LieElement &e);
LieElement lie_from_json(const json &j, std::size_t arity);

json to_json(const ModuleGenerator &g);
json to_json(const Relation &r);

/// {"partition", "algebra", "module", "relations"}; every relation is
/// evaluated and its certified_zero flag records the outcome.
json to_json(const GeneratorSet &gens, const std::vector<Relation> &relations);

} // namespace wdk::io

#endif // WDK_IO_HPP
