#pragma once

#include "piv/grassmann.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace piv {

enum class AlgKind { A, M11, UT2, E, Rp };

/// Infinite-rank evaluation targets, handled by parity representatives.
enum class Profile { A, M11, E };

/// Basis monomial: a single Grassmann monomial times a matrix unit times a
/// power of the central nilpotent t (t only occurs in the Rp truncations).
struct MonoBasisElt {
    int row = 0;
    int col = 0;
    int tpow = 0;
    GrassMask mask = 0;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Finite-dimensional test algebra with an enumerable monomial basis.
/// Products of basis elements are again signed basis elements, which is what
/// the identity engine's sweeps rely on.
class FiniteAlgebra {
public:
    static AlgebraPtr make_A(int n);
    static AlgebraPtr make_M11(int k);
    static AlgebraPtr make_UT2();
    static AlgebraPtr make_E(int n);
    static AlgebraPtr make_Rp(int p, int d);

    /// "A(n=2)", "M11(k=2)", "UT2", "E(n=4)", "Rp(p=2,d=4)"
    static AlgebraPtr parse(const std::string& spec);

    const std::string& name() const { return name_; }
    AlgKind kind() const { return kind_; }
    int grass_rank() const { return grass_rank_; }
    /// Nilpotency order of t; 1 means t does not occur.
    int t_order() const { return t_order_; }
    int matrix_dim() const { return matrix_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MonoBasisElt>& basis() const { return basis_; }
    const std::vector<std::pair<int, int>>& positions() const { return positions_; }

    bool entry_allowed(int row, int col, int parity, int tpow) const;

    /// Product of basis monomials: (sign, index), index -1 for zero.
    std::pair<int, int> mul_mono(int i, int j) const;

    int index_of(const MonoBasisElt& m) const;  // -1 if absent
    std::string basis_elt_str(int i) const;

private:
    FiniteAlgebra() = default;
    void enumerate_basis();

    AlgKind kind_ = AlgKind::UT2;
    std::string name_;
    int grass_rank_ = 0;
    int t_order_ = 1;
    int matrix_dim_ = 2;
    std::vector<MonoBasisElt> basis_;
    std::vector<std::pair<int, int>> positions_;
    std::map<std::uint64_t, int> lookup_;
};

/// Element of a FiniteAlgebra as a sparse combination of basis monomials.
class AlgElement {
public:
    explicit AlgElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
    static AlgElement basis_element(const AlgebraPtr& alg, int index, Scalar c = Scalar(1));
    static AlgElement unit(const AlgebraPtr& alg);
    /// Places a t-graded Grassmann value at matrix position (row, col);
    /// throws if the profile forbids some part of it.
    static AlgElement from_entry(const AlgebraPtr& alg, int row, int col,
                                 const GrassmannElement& value, int tpow = 0);

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return coords_.empty(); }
    const std::map<int, Scalar>& coords() const { return coords_; }
    void add(int index, const Scalar& c);

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    friend AlgElement operator*(const Scalar& c, const AlgElement& g);
    bool operator==(const AlgElement& o) const;

    /// Matrix entry as t-power -> Grassmann value.
    std::map<int, GrassmannElement> entry(int row, int col) const;

    std::string str() const;

private:
    AlgebraPtr alg_;
    std::map<int, Scalar> coords_;
};

/// 2x2 matrix product with Grassmann entry arithmetic.
AlgElement a_mul(const AlgElement& x, const AlgElement& y);

/// Same product computed entrywise through the matrix representation; tests
/// hold the two routes together.
AlgElement a_mul_via_matrix(const AlgElement& x, const AlgElement& y);

/// Per-slot representative elements standing in for the infinite-rank
/// algebras when testing a multilinear polynomial of degree m: slot i draws
/// from a fixed set over the reserved generators e_{2i-1}, e_{2i} of the
/// rank-2m algebra.
std::vector<AlgElement> representative_slot_options(Profile profile, int m, int slot,
                                                    const AlgebraPtr& alg);
/// The full tuple sweep, last slot fastest.
std::vector<std::vector<AlgElement>> representative_tuples(Profile profile, int m);

/// The rank-2m algebra the representatives live in.
AlgebraPtr profile_truncation(Profile profile, int m);

std::string profile_name(Profile profile);

}  // namespace piv
