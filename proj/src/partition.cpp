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

#include "wdk/partition.hpp"

#include <cctype>

namespace wdk {

std::string Bidegree::to_string() const {
    return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

Partition::Partition(std::vector<unsigned> cells) : cells_(std::move(cells)) {
    if (cells_.empty())
        throw InvalidPartition("partition must have at least one cell");
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i] > cells_[i - 1])
            throw InvalidPartition("partition entries must be non-increasing: " + to_string());
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        starts_.push_back(cell_of_.size());
        for (unsigned k = 0; k <= cells_[c]; ++k) {
            cell_of_.push_back(c);
            offset_of_.push_back(k);
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<unsigned> cells;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        if (item.empty())
            throw InvalidPartition("empty partition entry in '" + std::string(text) + "'");
        unsigned value = 0;
        for (char ch : item) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw InvalidPartition("partition entries must be non-negative integers: '" + std::string(text) + "'");
            value = value * 10 + static_cast<unsigned>(ch - '0');
            if (value > 64)
                throw InvalidPartition("partition entry too large in '" + std::string(text) + "'");
        }
        cells.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(cells));
}

Partition Partition::without_last_cell() const {
    if (cells_.size() < 2)
        throw InvalidPartition("cannot drop the only cell of " + to_string());
    return Partition(std::vector<unsigned>(cells_.begin(), cells_.end() - 1));
}

std::string Partition::to_string() const { return "(" + to_cli() + ")"; }

std::string Partition::to_cli() const {
    std::string out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(cells_[i]);
    }
    return out;
}

} // namespace wdk
