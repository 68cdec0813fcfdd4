#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace piv {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Hook length of the cell (r, c), 0-based.
    int hook_length(int r, int c) const;

    /// "(3,2,1)"
    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// Dimension of the irreducible S_m module for the shape: weight! over the
/// product of hook lengths; equals the number of standard Young tableaux.
std::uint64_t hook_dim(const Partition& lambda);

/// All partitions of n, largest-part-first lexicographic descending order.
std::vector<Partition> partitions_of(int n);

}  // namespace piv
