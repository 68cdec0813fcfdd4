#pragma once

#include "piv/scalar.hpp"

#include <map>
#include <set>
#include <vector>

namespace piv {

/// Monomial of the free algebra: a finite sequence of variable indices
/// (all >= 1). The empty word is the unit.
using Word = std::vector<int>;

/// Rational-coefficient polynomial in the free associative unitary algebra.
/// No zero coefficients are stored; the zero polynomial is the empty map.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return from_word({}); }
    static NCPoly var(int index);
    static NCPoly from_word(Word w, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return terms_ != o.terms_; }

    /// Indices of the variables that occur.
    std::set<int> variables() const;

    /// -1 if not homogeneous, else the common total degree (zero poly: 0).
    int homogeneous_degree() const;

    /// True iff every monomial uses each of x1..xn exactly once, n = degree.
    bool is_multilinear() const;

private:
    std::map<Word, Scalar> terms_;
};

/// Left-normed iterated commutator [a1,...,ak] = [[a1,...,a_{k-1}],ak].
/// Requires at least two arguments.
NCPoly commutator(const std::vector<NCPoly>& args);
/// Commutator of plain variables by index.
NCPoly commutator_vars(const std::vector<int>& indices);

/// Algebra endomorphism: every variable occurring in f must be assigned.
NCPoly substitute(const NCPoly& f, const std::map<int, NCPoly>& assignment);

}  // namespace piv
