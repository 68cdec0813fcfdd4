#include "piv/grassmann.hpp"

#include <stdexcept>

namespace piv {

int merge_sign(GrassMask s, GrassMask t) {
    int inversions = 0;
    while (t) {
        const int bit = __builtin_ctzll(t);
        t &= t - 1;
        // Generators of s strictly above this one must jump over it.
        inversions += __builtin_popcountll(s >> (bit + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

GrassmannElement GrassmannElement::one(int rank) {
    return monomial(rank, 0);
}

GrassmannElement GrassmannElement::monomial(int rank, GrassMask mask, Scalar c) {
    if (rank < 64 && (mask >> rank) != 0)
        throw std::invalid_argument("GrassmannElement: mask exceeds rank");
    GrassmannElement g(rank);
    g.add_term(mask, c);
    return g;
}

GrassmannElement GrassmannElement::generator(int rank, int i) {
    if (i < 1 || i > rank)
        throw std::invalid_argument("GrassmannElement: generator index out of range");
    return monomial(rank, GrassMask(1) << (i - 1));
}

void GrassmannElement::add_term(GrassMask mask, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (piv::is_zero(it->second)) terms_.erase(it);
    }
}

Scalar GrassmannElement::coeff(GrassMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Scalar(0) : it->second;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Grassmann: rank mismatch");
    GrassmannElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Grassmann: rank mismatch");
    GrassmannElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GrassmannElement operator*(const Scalar& c, const GrassmannElement& g) {
    GrassmannElement r(g.rank_);
    if (is_zero(c)) return r;
    for (const auto& [m, gc] : g.terms_) r.terms_.emplace(m, c * gc);
    return r;
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        const bool neg = sgn(c) < 0;
        const Scalar mag = neg ? Scalar(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int b = 0; b < 64; ++b)
            if (mask & (GrassMask(1) << b)) mono += "e{" + std::to_string(b + 1) + "}";
        if (mono.empty()) out += scalar_str(mag);
        else if (mag == 1) out += mono;
        else out += scalar_str(mag) + "*" + mono;
    }
    return out;
}

GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("g_mul: rank mismatch");
    GrassmannElement r(a.rank());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            const int s = merge_sign(ma, mb);
            r.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    }
    return r;
}

std::pair<GrassmannElement, GrassmannElement> parity_split(const GrassmannElement& a) {
    GrassmannElement even(a.rank()), odd(a.rank());
    for (const auto& [m, c] : a.terms()) {
        if (__builtin_popcountll(m) % 2 == 0) even.add_term(m, c);
        else odd.add_term(m, c);
    }
    return {even, odd};
}

std::vector<GrassmannElement> grassmann_basis(int n) {
    std::vector<GrassmannElement> out;
    out.reserve(static_cast<size_t>(1) << n);
    for (GrassMask m = 0; m < (GrassMask(1) << n); ++m)
        out.push_back(GrassmannElement::monomial(n, m));
    return out;
}

}  // namespace piv
