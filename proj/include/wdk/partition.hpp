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

#ifndef WDK_PARTITION_HPP
#define WDK_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdk {

/// Torus weights (lambda_1, lambda_2) of a bihomogeneous element.
struct Bidegree {
    unsigned first = 0;
    unsigned second = 0;

    friend auto operator<=>(const Bidegree &, const Bidegree &) = default;
    std::string to_string() const;
};

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Jordan cell layout (p_1 >= ... >= p_s >= 0): cell i covers p_i + 1
/// consecutive variables; the variable at offset k inside cell i carries
/// bidegree (p_i - k, k).
class Partition {
public:
    /// Throws InvalidPartition when empty or not non-increasing.
    explicit Partition(std::vector<unsigned> cells);

    /// Parses "2,0" (cell sizes minus one).
    static Partition parse(std::string_view text);

    const std::vector<unsigned> &cells() const { return cells_; }
    std::size_t cell_count() const { return cells_.size(); }
    /// Number of variables d = sum (p_i + 1).
    std::size_t arity() const { return cell_of_.size(); }

    std::size_t cell_of(std::size_t var) const { return cell_of_[var]; }
    unsigned offset_of(std::size_t var) const { return offset_of_[var]; }
    std::size_t cell_start(std::size_t cell) const { return starts_[cell]; }
    Bidegree bidegree_of(std::size_t var) const {
        return {cells_[cell_of_[var]] - offset_of_[var], offset_of_[var]};
    }

    /// True when the last cell is a 1x1 cell on the last variable.
    bool has_trailing_trivial_cell() const { return cells_.back() == 0; }
    /// The partition without its last cell (requires at least two cells).
    Partition without_last_cell() const;

    /// "(2,0)".
    std::string to_string() const;
    /// "2,0".
    std::string to_cli() const;

    friend bool operator==(const Partition &a, const Partition &b) { return a.cells_ == b.cells_; }

private:
    std::vector<unsigned> cells_;
    std::vector<std::size_t> cell_of_;
    std::vector<unsigned> offset_of_;
    std::vector<std::size_t> starts_;
};

} // namespace wdk

#endif // WDK_PARTITION_HPP
