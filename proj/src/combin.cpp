#include "piv/combin.hpp"

#include <algorithm>

namespace piv {

std::uint64_t derangements(int n) {
    if (n <= 0) return 1;
    if (n == 1) return 0;
    std::uint64_t prev2 = 1, prev1 = 0;  // d_0, d_1
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t cur = static_cast<std::uint64_t>(k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace {

std::vector<std::vector<int>> subsets_min2(const std::vector<int>& pool) {
    // Subsets of size >= 2, in ascending bitmask order over pool positions.
    std::vector<std::vector<int>> out;
    const int m = static_cast<int>(pool.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(pool[static_cast<size_t>(i)]);
        out.push_back(std::move(s));
    }
    return out;
}

void rec_osp(const std::vector<int>& remaining, int blocks_left,
             std::vector<std::vector<int>>& cur,
             std::vector<OrderedSetPartition>& out) {
    if (blocks_left == 0) {
        if (remaining.empty()) out.push_back(cur);
        return;
    }
    if (static_cast<int>(remaining.size()) < 2 * blocks_left) return;
    for (auto& block : subsets_min2(remaining)) {
        std::vector<int> rest;
        std::set_difference(remaining.begin(), remaining.end(), block.begin(), block.end(),
                            std::back_inserter(rest));
        cur.push_back(block);
        rec_osp(rest, blocks_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<OrderedSetPartition> ordered_set_partitions_min2(int n) {
    std::vector<OrderedSetPartition> out;
    if (n < 2) return out;
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<std::vector<int>> cur;
        rec_osp(all, k, cur, out);
    }
    return out;
}

}  // namespace piv
