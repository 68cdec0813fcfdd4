#pragma once

#include "piv/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace piv {

using GrassMask = std::uint64_t;

/// Sign of moving the generators of S past those of T when concatenating
/// e_S e_T into ascending order; the masks must be disjoint.
int merge_sign(GrassMask s, GrassMask t);

/// Exact element of the n-generator Grassmann algebra, stored as a signed
/// combination of generator subsets (bit masks, bit i-1 <-> e_i).
class GrassmannElement {
public:
    explicit GrassmannElement(int rank) : rank_(rank) {}
    static GrassmannElement zero(int rank) { return GrassmannElement(rank); }
    static GrassmannElement one(int rank);
    static GrassmannElement monomial(int rank, GrassMask mask, Scalar c = Scalar(1));
    /// e_i, 1-based.
    static GrassmannElement generator(int rank, int i);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GrassMask, Scalar>& terms() const { return terms_; }

    void add_term(GrassMask mask, const Scalar& c);
    Scalar coeff(GrassMask mask) const;

    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;
    GrassmannElement operator-() const;
    friend GrassmannElement operator*(const Scalar& c, const GrassmannElement& g);

    bool operator==(const GrassmannElement& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

    /// "1 + e{1}e{2} - 2*e{3}", masks ascending.
    std::string str() const;

private:
    int rank_;
    std::map<GrassMask, Scalar> terms_;
};

/// Bilinear anticommutative product; e_S e_T = 0 when the subsets meet.
GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b);

/// Even/odd components; the even part is central.
std::pair<GrassmannElement, GrassmannElement> parity_split(const GrassmannElement& a);

/// All 2^n subset monomials in mask-ascending order.
std::vector<GrassmannElement> grassmann_basis(int n);

}  // namespace piv
