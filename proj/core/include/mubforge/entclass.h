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

#ifndef MUBFORGE_ENTCLASS_H
#define MUBFORGE_ENTCLASS_H

#include <cstdint>
#include <vector>

#include "mubforge/mubgen.h"

namespace mubforge {

/// Disjoint qubit blocks covering 0..m-1. Blocks are sorted and listed by smallest member.
struct QubitPartition {
    std::vector<std::vector<size_t>> blocks;

    /// Block sizes in descending order.
    std::vector<size_t> shape() const;
    bool operator==(const QubitPartition &o) const = default;
};

/// Finest split of the qubits into independent subsystems for one commuting class.
///
/// A qubit set A splits off when exactly 2^|A| - 1 class elements act only on A, i.e. the
/// class restricted to A is itself a maximal commuting set there. The blocks are the minimal
/// such sets.
QubitPartition class_partition(const std::vector<PackedPauli> &cls, size_t m);

size_t separability_count(const QubitPartition &p);

/// All integer partitions of m in canonical order: more parts first, then descending parts
/// compared lexicographically.
std::vector<std::vector<size_t>> canonical_partitions(size_t m);

/// 1-based position of a block-size multiset among canonical_partitions(m).
size_t partition_rank(std::vector<size_t> shape, size_t m);

using StructureVector = std::vector<size_t>;

/// Histogram of partition ranks over all classes.
StructureVector structure_vector(const PauliClassSet &set);

}  // namespace mubforge

#endif
