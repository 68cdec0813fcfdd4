#include "piv/multilinear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace piv {

MultilinearPoly::MultilinearPoly(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("MultilinearPoly: degree must be >= 1");
    coeffs_.assign(factorial(degree), Scalar(0));
}

void MultilinearPoly::set_coeff(const std::vector<int>& word, const Scalar& c) {
    coeffs_[perm_rank(word)] = c;
}

void MultilinearPoly::add_coeff(const std::vector<int>& word, const Scalar& c) {
    coeffs_[perm_rank(word)] += c;
}

bool MultilinearPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!piv::is_zero(c)) return false;
    return true;
}

NCPoly MultilinearPoly::to_ncpoly() const {
    NCPoly p;
    for (std::uint64_t r = 0; r < width(); ++r) {
        if (piv::is_zero(coeffs_[r])) continue;
        p.add_term(perm_unrank(degree_, r), coeffs_[r]);
    }
    return p;
}

MultilinearPoly MultilinearPoly::from_ncpoly(const NCPoly& f) {
    const int n = f.homogeneous_degree();
    if (n < 1 || !f.is_multilinear())
        throw std::invalid_argument("from_ncpoly: polynomial is not multilinear on x1..xn");
    MultilinearPoly m(n);
    for (const auto& [w, c] : f.terms()) m.set_coeff(w, c);
    return m;
}

MultilinearPoly multilinearize(const NCPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("multilinearize: zero polynomial");
    const int n = f.homogeneous_degree();
    if (n < 1) throw std::invalid_argument("multilinearize: input must be homogeneous of degree >= 1");

    // Multiplicity per variable; polarization needs it uniform across monomials.
    std::map<int, int> mult;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        std::map<int, int> local;
        for (int v : w) ++local[v];
        if (first) {
            mult = local;
            first = false;
        } else if (local != mult) {
            throw std::invalid_argument("multilinearize: input must be multihomogeneous");
        }
    }

    auto used = f.variables();
    NCPoly g = f;
    for (const auto& [v, m] : mult) {
        if (m < 2) continue;
        NCPoly sum = NCPoly::var(v);
        int fresh = 1;
        for (int k = 0; k < m - 1; ++k) {
            while (used.count(fresh)) ++fresh;
            used.insert(fresh);
            sum += NCPoly::var(fresh);
        }
        std::map<int, NCPoly> assignment;
        for (int u : g.variables())
            assignment.emplace(u, u == v ? sum : NCPoly::var(u));
        g = substitute(g, assignment);
    }

    // Squarefree full-support component.
    NCPoly sf;
    for (const auto& [w, c] : g.terms()) {
        std::set<int> distinct(w.begin(), w.end());
        if (distinct.size() == w.size() && w.size() == used.size())
            sf.add_term(w, c);
    }
    if (sf.is_zero())
        throw std::logic_error("multilinearize: squarefree component vanished");

    // Compress variable indices to 1..n, order preserving.
    std::map<int, int> renumber;
    int next = 1;
    for (int v : sf.variables()) renumber[v] = next++;
    NCPoly out;
    for (const auto& [w, c] : sf.terms()) {
        Word nw;
        nw.reserve(w.size());
        for (int v : w) nw.push_back(renumber[v]);
        out.add_term(nw, c);
    }
    return MultilinearPoly::from_ncpoly(out);
}

}  // namespace piv
