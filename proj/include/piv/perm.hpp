#pragma once

#include <cstdint>
#include <vector>

namespace piv {

/// Bijection on {1..n} stored as its image sequence, with the sign cached.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    /// Image of i (1-based).
    int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }
    int sign() const { return sign_; }

    Permutation compose_after(const Permutation& inner) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
    int sign_ = 1;
};

int sign_of_images(const std::vector<int>& images);

std::uint64_t factorial(int n);

/// Rank of an image sequence among all permutations of {1..n} in
/// lexicographic order (Lehmer code).
std::uint64_t perm_rank(const std::vector<int>& images);
std::vector<int> perm_unrank(int n, std::uint64_t rank);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace piv
