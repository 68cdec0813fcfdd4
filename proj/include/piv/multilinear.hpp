#pragma once

#include "piv/ncpoly.hpp"
#include "piv/perm.hpp"

#include <vector>

namespace piv {

/// Element of P_n: coefficients over the n! monomials x_{s1}...x_{sn},
/// indexed by the lexicographic rank of the image sequence (s1..sn).
class MultilinearPoly {
public:
    explicit MultilinearPoly(int degree);

    int degree() const { return degree_; }
    std::uint64_t width() const { return static_cast<std::uint64_t>(coeffs_.size()); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    const Scalar& coeff_at_rank(std::uint64_t r) const { return coeffs_[r]; }
    void set_coeff(const std::vector<int>& word, const Scalar& c);
    void add_coeff(const std::vector<int>& word, const Scalar& c);

    bool is_zero() const;

    NCPoly to_ncpoly() const;
    /// Fails unless the polynomial is multilinear of full support on x1..xn.
    static MultilinearPoly from_ncpoly(const NCPoly& f);

    bool operator==(const MultilinearPoly& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

private:
    int degree_;
    std::vector<Scalar> coeffs_;
};

/// Complete multilinearization of a homogeneous nonzero polynomial: each
/// repeated variable of multiplicity d is replaced by itself plus the d-1
/// smallest indices unused so far (ascending), and the squarefree component
/// is extracted. Variable indices are then compressed order-preservingly to
/// 1..n. Already multilinear input comes back unchanged.
MultilinearPoly multilinearize(const NCPoly& f);

}  // namespace piv
