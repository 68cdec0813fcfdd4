#include "piv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace piv {

int sign_of_images(const std::vector<int>& images) {
    int inv = 0;
    const int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images[static_cast<size_t>(i)] > images[static_cast<size_t>(j)]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: image sequence is not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
    sign_ = sign_of_images(images_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::compose_after(const Permutation& inner) const {
    if (size() != inner.size())
        throw std::invalid_argument("Permutation: size mismatch in composition");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i)
        im[static_cast<size_t>(i - 1)] = (*this)(inner(i));
    return Permutation(std::move(im));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t perm_rank(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[static_cast<size_t>(j)] < images[static_cast<size_t>(i)]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return rank;
}

std::vector<int> perm_unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const size_t idx = static_cast<size_t>(rank / f);
        rank %= f;
        images.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return images;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace piv
