#include "piv/proper.hpp"

#include "piv/combin.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace piv {

std::vector<MultilinearPoly> proper_spanning_set(int n) {
    std::vector<MultilinearPoly> out;
    if (n < 2) return out;
    for (const auto& osp : ordered_set_partitions_min2(n)) {
        // All arrangements within each block, blockwise lexicographic.
        std::vector<std::vector<std::vector<int>>> arrangements;
        for (const auto& block : osp) {
            std::vector<std::vector<int>> arr;
            std::vector<int> b = block;
            do {
                arr.push_back(b);
            } while (std::next_permutation(b.begin(), b.end()));
            arrangements.push_back(std::move(arr));
        }
        std::vector<size_t> pick(osp.size(), 0);
        while (true) {
            NCPoly prod = NCPoly::unit();
            for (size_t bi = 0; bi < osp.size(); ++bi)
                prod = prod * commutator_vars(arrangements[bi][pick[bi]]);
            out.push_back(MultilinearPoly::from_ncpoly(prod));
            size_t k = osp.size();
            while (k > 0) {
                --k;
                if (++pick[k] < arrangements[k].size()) break;
                pick[k] = 0;
                if (k == 0) { k = SIZE_MAX; break; }
            }
            if (k == SIZE_MAX) break;
        }
    }
    return out;
}

namespace {

SparseIntRow sparse_from_multilinear(const MultilinearPoly& m) {
    SparseIntRow row;
    for (std::uint64_t r = 0; r < m.width(); ++r) {
        const Scalar& c = m.coeffs()[r];
        if (is_zero(c)) continue;
        if (!is_integer(c)) throw std::logic_error("expected integer coefficients");
        row.emplace_back(static_cast<int>(r), static_cast<long long>(c.get_num().get_si()));
    }
    return row;
}

}  // namespace

ProperBasis::ProperBasis(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("ProperBasis: degree must be >= 2");
    KernelAccumulator acc(static_cast<int>(factorial(n)));
    const std::uint64_t target = derangements(n);
    for (const auto& poly : proper_spanning_set(n)) {
        acc.insert(sparse_from_multilinear(poly));
        // The span has dimension d_n; stop once reached. Tests sweep the
        // whole set and confirm the rank never moves past this.
        if (static_cast<std::uint64_t>(acc.rank()) == target) break;
    }
    if (static_cast<std::uint64_t>(acc.rank()) != target)
        throw std::logic_error("ProperBasis: spanning set rank fell short of the derangement count");
    basis_ = acc.accepted();
    annihilator_ = acc.kernel_rows();
}

bool ProperBasis::contains(const std::vector<Scalar>& v) const {
    for (const auto& k : annihilator_) {
        Scalar acc(0);
        for (size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i]) && sgn(k[i]) != 0) acc += v[i] * Scalar(k[i]);
        if (!is_zero(acc)) return false;
    }
    return true;
}

SparseIntRow ProperBasis::restrict_functional(const std::vector<long long>& functional) const {
    SparseIntRow out;
    for (size_t j = 0; j < basis_.size(); ++j) {
        long long acc = 0;
        for (const auto& [idx, c] : basis_[j])
            acc += functional[static_cast<size_t>(idx)] * c;
        if (acc != 0) out.emplace_back(static_cast<int>(j), acc);
    }
    return out;
}

std::vector<Scalar> ProperBasis::expand(const std::vector<Scalar>& y) const {
    std::vector<Scalar> v(ambient_width(), Scalar(0));
    for (size_t j = 0; j < basis_.size(); ++j) {
        if (is_zero(y[j])) continue;
        for (const auto& [idx, c] : basis_[j])
            v[static_cast<size_t>(idx)] += y[j] * Scalar(static_cast<long>(c));
    }
    return v;
}

std::shared_ptr<const ProperBasis> proper_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ProperBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto basis = std::make_shared<const ProperBasis>(n);
    cache.emplace(n, basis);
    return basis;
}

}  // namespace piv
