#pragma once

#include "piv/scalar.hpp"

#include <utility>
#include <vector>

namespace piv {

/// Exact row space in reduced echelon form. Pivots are strictly increasing,
/// every pivot entry is 1 and is the only nonzero entry in its column, so two
/// equal subspaces have literally equal row lists.
class DenseRowSpace {
public:
    explicit DenseRowSpace(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Inserts v into the span. Returns true iff v was independent of the
    /// prior span. Exact arithmetic throughout.
    bool insert(std::vector<Scalar> v);

    /// Reduces v against the space without modifying it; returns the residue.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    /// True iff v lies in the span.
    bool contains(const std::vector<Scalar>& v) const;

    /// Basis of the null space {x : row * x = 0 for all rows}, one vector per
    /// free column, in ascending free-column order.
    std::vector<std::vector<Scalar>> null_space_basis() const;

    bool operator==(const DenseRowSpace& o) const {
        return width_ == o.width_ && rows_ == o.rows_;
    }

private:
    int width_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

/// Integer vector with entries attached to column indices, sorted by column.
using SparseIntRow = std::vector<std::pair<int, long long>>;
/// Same, with arbitrary-precision entries.
using SparseZRow = std::vector<std::pair<int, Integer>>;

std::vector<Scalar> sparse_to_scalar_vec(const SparseIntRow& r, int width);

/// Exact incremental rank structure for long streams of mostly-redundant
/// integer rows. Alongside the accepted rows it maintains an integer basis K
/// of the common kernel of everything inserted so far; a candidate row is in
/// the current span iff it annihilates K, which costs |K| sparse dots instead
/// of a full elimination pass. All arithmetic is exact.
class KernelAccumulator {
public:
    explicit KernelAccumulator(int width);

    int width() const { return width_; }
    int rank() const { return static_cast<int>(accepted_.size()); }
    int kernel_dim() const { return static_cast<int>(kernel_.size()); }

    /// Returns true iff the row was independent of the prior span.
    bool insert(const SparseIntRow& row);

    /// True iff row is in the span of the accepted rows.
    bool in_span(const SparseIntRow& row) const;

    const std::vector<SparseIntRow>& accepted() const { return accepted_; }
    const std::vector<std::vector<Integer>>& kernel_rows() const { return kernel_; }

    /// Canonical RREF of the accepted rows.
    DenseRowSpace span_rref() const;
    /// Canonical RREF of the kernel.
    DenseRowSpace kernel_rref() const;

private:
    int width_;
    std::vector<SparseIntRow> accepted_;
    std::vector<std::vector<Integer>> kernel_;
};

}  // namespace piv
