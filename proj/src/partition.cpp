#include "piv/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace piv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::hook_length(int r, int c) const {
    const int arm = parts_[static_cast<size_t>(r)] - c - 1;
    int leg = 0;
    for (size_t i = static_cast<size_t>(r) + 1; i < parts_.size(); ++i)
        if (parts_[i] > c) ++leg;
    return arm + leg + 1;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::uint64_t hook_dim(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("hook_dim: empty partition");
    std::uint64_t num = 1;
    for (int i = 2; i <= lambda.weight(); ++i) num *= static_cast<std::uint64_t>(i);
    std::uint64_t hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts()[static_cast<size_t>(r)]; ++c)
            hooks *= static_cast<std::uint64_t>(lambda.hook_length(r, c));
    return num / hooks;
}

namespace {
void rec_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        rec_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    rec_partitions(n, n, cur, out);
    return out;
}

}  // namespace piv
