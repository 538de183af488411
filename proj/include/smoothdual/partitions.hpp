#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace smoothdual {

// Cycle types of symmetric-group elements: a non-increasing vector of positive
// parts. [] is the unique partition of 0. Permutations themselves are never
// materialized here; only the cycle-type data matters downstream.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_sum(const Partition& p);

// All partitions of r, each once, lexicographically decreasing:
// [r] first, [1,...,1] last.
std::vector<Partition> partitions_of(int r);

// Distinct parts with their multiplicities, smallest part first.
std::vector<std::pair<int, int>> part_multiplicities(const Partition& p);

// Order of the centralizer in S_r of a permutation with this cycle type:
// the product over distinct parts t with multiplicity n of t^n * n!.
std::uint64_t centralizer_order(const Partition& p);

// r! / centralizer_order(p): the number of permutations of this cycle type.
std::uint64_t conjugacy_class_size(const Partition& p);

std::uint64_t factorial(int r);

}  // namespace smoothdual
