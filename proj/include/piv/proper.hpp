#pragma once

#include "piv/multilinear.hpp"
#include "piv/rowspace.hpp"

#include <memory>
#include <vector>

namespace piv {

/// Spanning set of the proper multilinear polynomials of degree n: for every
/// ordered set partition of {1..n} into blocks of size >= 2 and every
/// arrangement of each block, the product of left-normed commutators.
/// n < 2 yields the empty sequence.
std::vector<MultilinearPoly> proper_spanning_set(int n);

/// A fixed basis of the proper subspace of P_n, selected as the first
/// rank-independent rows of the spanning set, plus the exact annihilator
/// used for membership tests. Built once per degree and shared.
class ProperBasis {
public:
    explicit ProperBasis(int n);

    int degree() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    std::uint64_t ambient_width() const { return factorial(n_); }

    /// Basis vectors as sparse integer rows over the monomial coordinates.
    const std::vector<SparseIntRow>& basis_rows() const { return basis_; }

    /// True iff the vector lies in the span of the proper polynomials.
    bool contains(const std::vector<Scalar>& monomial_coords) const;

    /// Functional restriction: given a row functional on P_n (dense, width n!)
    /// returns its coordinates against this basis (width dim()).
    SparseIntRow restrict_functional(const std::vector<long long>& functional) const;

    /// Expands proper coordinates y into monomial coordinates sum_j y_j B_j.
    std::vector<Scalar> expand(const std::vector<Scalar>& proper_coords) const;

private:
    int n_;
    std::vector<SparseIntRow> basis_;
    std::vector<std::vector<Integer>> annihilator_;  // kernel rows of the span
};

/// Process-wide cache, one ProperBasis per degree.
std::shared_ptr<const ProperBasis> proper_basis(int n);

}  // namespace piv
