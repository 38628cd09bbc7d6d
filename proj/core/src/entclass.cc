// Copyright 2026 The mubforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubforge/entclass.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mubforge {

std::vector<size_t> QubitPartition::shape() const {
    std::vector<size_t> s;
    for (const auto &b : blocks) {
        s.push_back(b.size());
    }
    std::sort(s.rbegin(), s.rend());
    return s;
}

QubitPartition class_partition(const std::vector<PackedPauli> &cls, size_t m) {
    if (m == 0 || m > 20) {
        throw std::invalid_argument("class_partition: need 1 <= m <= 20");
    }
    size_t subsets = size_t{1} << m;
    // inside[A] = number of class elements whose support lies in A.
    std::vector<uint32_t> inside(subsets, 0);
    for (PackedPauli p : cls) {
        inside[packed_z(p) | packed_x(p)]++;
    }
    for (size_t bit = 0; bit < m; bit++) {
        for (size_t a = 0; a < subsets; a++) {
            if ((a >> bit) & 1) {
                inside[a] += inside[a ^ (size_t{1} << bit)];
            }
        }
    }
    std::vector<uint32_t> block_of(m, static_cast<uint32_t>(subsets - 1));
    for (size_t a = 1; a < subsets; a++) {
        if (inside[a] != (uint32_t{1} << std::popcount(a)) - 1) {
            continue;
        }
        for (size_t q = 0; q < m; q++) {
            if ((a >> q) & 1) {
                block_of[q] &= static_cast<uint32_t>(a);
            }
        }
    }
    // Close under overlap so the result is always a partition.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t q = 0; q < m; q++) {
            for (size_t r = 0; r < m; r++) {
                if ((block_of[q] & block_of[r]) && block_of[q] != block_of[r]) {
                    uint32_t u = block_of[q] | block_of[r];
                    block_of[q] = block_of[r] = u;
                    changed = true;
                }
            }
        }
    }
    QubitPartition part;
    uint32_t covered = 0;
    for (size_t q = 0; q < m; q++) {
        if ((covered >> q) & 1) {
            continue;
        }
        std::vector<size_t> block;
        for (size_t r = 0; r < m; r++) {
            if ((block_of[q] >> r) & 1) {
                block.push_back(r);
            }
        }
        covered |= block_of[q];
        part.blocks.push_back(std::move(block));
    }
    return part;
}

size_t separability_count(const QubitPartition &p) {
    return p.blocks.size();
}

std::vector<std::vector<size_t>> canonical_partitions(size_t m) {
    std::vector<std::vector<size_t>> all;
    std::vector<size_t> cur;
    std::function<void(size_t, size_t)> rec = [&](size_t rest, size_t max_part) {
        if (rest == 0) {
            all.push_back(cur);
            return;
        }
        for (size_t p = std::min(rest, max_part); p >= 1; p--) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    std::sort(all.begin(), all.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a < b;
    });
    return all;
}

size_t partition_rank(std::vector<size_t> shape, size_t m) {
    std::sort(shape.rbegin(), shape.rend());
    if (std::accumulate(shape.begin(), shape.end(), size_t{0}) != m || std::count(shape.begin(), shape.end(), 0)) {
        throw std::invalid_argument("partition_rank: not a partition of " + std::to_string(m));
    }
    auto all = canonical_partitions(m);
    auto it = std::find(all.begin(), all.end(), shape);
    return static_cast<size_t>(it - all.begin()) + 1;
}

StructureVector structure_vector(const PauliClassSet &set) {
    if (set.classes.empty()) {
        throw std::invalid_argument("structure_vector: classes not materialized");
    }
    auto all = canonical_partitions(set.m);
    StructureVector n(all.size(), 0);
    for (const auto &cls : set.classes) {
        auto shape = class_partition(cls, set.m).shape();
        auto it = std::find(all.begin(), all.end(), shape);
        n[it - all.begin()]++;
    }
    return n;
}

}  // namespace mubforge
