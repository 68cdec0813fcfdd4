#include "piv/rowspace.hpp"

#include <stdexcept>

namespace piv {

bool DenseRowSpace::insert(std::vector<Scalar> v) {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("DenseRowSpace: width mismatch");
    v = reduce(std::move(v));
    int lead = -1;
    for (int i = 0; i < width_; ++i)
        if (!is_zero(v[static_cast<size_t>(i)])) { lead = i; break; }
    if (lead < 0) return false;

    const Scalar inv = 1 / v[static_cast<size_t>(lead)];
    for (auto& x : v) x *= inv;

    // Back-reduce existing rows so the form stays fully reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = rows_[r][static_cast<size_t>(lead)];
        if (is_zero(c)) continue;
        for (int i = lead; i < width_; ++i)
            rows_[r][static_cast<size_t>(i)] -= c * v[static_cast<size_t>(i)];
    }

    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
}

std::vector<Scalar> DenseRowSpace::reduce(std::vector<Scalar> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = v[static_cast<size_t>(pivots_[r])];
        if (is_zero(c)) continue;
        for (int i = pivots_[r]; i < width_; ++i)
            v[static_cast<size_t>(i)] -= c * rows_[r][static_cast<size_t>(i)];
    }
    return v;
}

bool DenseRowSpace::contains(const std::vector<Scalar>& v) const {
    auto res = reduce(v);
    for (const auto& x : res)
        if (!is_zero(x)) return false;
    return true;
}

std::vector<std::vector<Scalar>> DenseRowSpace::null_space_basis() const {
    std::vector<bool> is_pivot(static_cast<size_t>(width_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < width_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(width_), Scalar(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < rows_.size(); ++r)
            v[static_cast<size_t>(pivots_[r])] = -rows_[r][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> sparse_to_scalar_vec(const SparseIntRow& r, int width) {
    std::vector<Scalar> v(static_cast<size_t>(width), Scalar(0));
    for (const auto& [i, c] : r) v[static_cast<size_t>(i)] = Scalar(static_cast<long>(c));
    return v;
}

KernelAccumulator::KernelAccumulator(int width) : width_(width) {
    kernel_.reserve(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) {
        std::vector<Integer> e(static_cast<size_t>(width));
        e[static_cast<size_t>(i)] = 1;
        kernel_.push_back(std::move(e));
    }
}

bool KernelAccumulator::insert(const SparseIntRow& row) {
    // d_j = K_j . row
    std::vector<size_t> hits;
    std::vector<Integer> dots(kernel_.size());
    for (size_t j = 0; j < kernel_.size(); ++j) {
        Integer acc = 0;
        const auto& k = kernel_[j];
        for (const auto& [i, c] : row) {
            if (c >= 0)
                mpz_addmul_ui(acc.get_mpz_t(), k[static_cast<size_t>(i)].get_mpz_t(),
                              static_cast<unsigned long>(c));
            else
                mpz_submul_ui(acc.get_mpz_t(), k[static_cast<size_t>(i)].get_mpz_t(),
                              static_cast<unsigned long>(-c));
        }
        if (sgn(acc) != 0) hits.push_back(j);
        dots[j] = std::move(acc);
    }
    if (hits.empty()) return false;

    const size_t j0 = hits[0];
    const Integer& d0 = dots[j0];
    for (size_t idx = 1; idx < hits.size(); ++idx) {
        const size_t j = hits[idx];
        auto& kj = kernel_[j];
        const auto& k0 = kernel_[j0];
        Integer g = 0;
        for (int i = 0; i < width_; ++i) {
            Integer v = kj[static_cast<size_t>(i)] * d0 - k0[static_cast<size_t>(i)] * dots[j];
            kj[static_cast<size_t>(i)] = std::move(v);
            if (g != 1 && sgn(kj[static_cast<size_t>(i)]) != 0)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kj[static_cast<size_t>(i)].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : kj)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    kernel_.erase(kernel_.begin() + static_cast<std::ptrdiff_t>(j0));
    accepted_.push_back(row);
    return true;
}

bool KernelAccumulator::in_span(const SparseIntRow& row) const {
    for (const auto& k : kernel_) {
        Integer acc = 0;
        for (const auto& [i, c] : row) {
            if (c >= 0)
                mpz_addmul_ui(acc.get_mpz_t(), k[static_cast<size_t>(i)].get_mpz_t(),
                              static_cast<unsigned long>(c));
            else
                mpz_submul_ui(acc.get_mpz_t(), k[static_cast<size_t>(i)].get_mpz_t(),
                              static_cast<unsigned long>(-c));
        }
        if (sgn(acc) != 0) return false;
    }
    return true;
}

DenseRowSpace KernelAccumulator::span_rref() const {
    DenseRowSpace s(width_);
    for (const auto& r : accepted_) s.insert(sparse_to_scalar_vec(r, width_));
    return s;
}

DenseRowSpace KernelAccumulator::kernel_rref() const {
    DenseRowSpace s(width_);
    for (const auto& k : kernel_) {
        std::vector<Scalar> v(static_cast<size_t>(width_));
        for (int i = 0; i < width_; ++i) v[static_cast<size_t>(i)] = Scalar(k[static_cast<size_t>(i)]);
        s.insert(std::move(v));
    }
    return s;
}

}  // namespace piv
