#pragma once

#include <cstdint>
#include <vector>

namespace piv {

/// Number of fixed-point-free permutations of {1..n}; d_0 = 1.
std::uint64_t derangements(int n);

/// One ordered set partition: a sequence of disjoint blocks (each sorted
/// ascending) covering {1..n}.
using OrderedSetPartition = std::vector<std::vector<int>>;

/// All ordered set partitions of {1..n} with every block of size >= 2.
/// Order: block count ascending, then lexicographic on the block sequence.
/// n < 2 yields the empty sequence.
std::vector<OrderedSetPartition> ordered_set_partitions_min2(int n);

}  // namespace piv
