#include "piv/ncpoly.hpp"

#include <stdexcept>

namespace piv {

NCPoly NCPoly::var(int index) {
    if (index < 1) throw std::invalid_argument("NCPoly: variable index must be >= 1");
    return from_word({index});
}

NCPoly NCPoly::from_word(Word w, Scalar c) {
    NCPoly p;
    if (!is_zero(c)) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (piv::is_zero(it->second)) terms_.erase(it);
    }
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly r;
    if (is_zero(c)) return r;
    for (const auto& [w, pc] : p.terms_) r.terms_.emplace(w, c * pc);
    return r;
}

std::set<int> NCPoly::variables() const {
    std::set<int> vars;
    for (const auto& [w, c] : terms_)
        for (int v : w) vars.insert(v);
    return vars;
}

int NCPoly::homogeneous_degree() const {
    int deg = -2;
    for (const auto& [w, c] : terms_) {
        const int d = static_cast<int>(w.size());
        if (deg == -2) deg = d;
        else if (deg != d) return -1;
    }
    return deg == -2 ? 0 : deg;
}

bool NCPoly::is_multilinear() const {
    const int n = homogeneous_degree();
    if (n < 0) return false;
    for (const auto& [w, c] : terms_) {
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        for (int v : w) {
            if (v > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = true;
        }
    }
    return true;
}

NCPoly commutator(const std::vector<NCPoly>& args) {
    if (args.size() < 2)
        throw std::invalid_argument("commutator: needs at least 2 arguments");
    NCPoly acc = args[0];
    for (size_t i = 1; i < args.size(); ++i)
        acc = acc * args[i] - args[i] * acc;
    return acc;
}

NCPoly commutator_vars(const std::vector<int>& indices) {
    std::vector<NCPoly> args;
    args.reserve(indices.size());
    for (int i : indices) args.push_back(NCPoly::var(i));
    return commutator(args);
}

NCPoly substitute(const NCPoly& f, const std::map<int, NCPoly>& assignment) {
    NCPoly out;
    for (const auto& [w, c] : f.terms()) {
        NCPoly prod = NCPoly::unit();
        for (int v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("substitute: no assignment for x" + std::to_string(v));
            prod = prod * it->second;
        }
        out += c * prod;
    }
    return out;
}

}  // namespace piv
