#include "piv/algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace piv {

namespace {

std::uint64_t lookup_key(const MonoBasisElt& m) {
    // row, col < 2; tpow < 256; mask < 2^48 at desk scale.
    return (static_cast<std::uint64_t>(m.row) << 62) |
           (static_cast<std::uint64_t>(m.col) << 60) |
           (static_cast<std::uint64_t>(m.tpow) << 52) | m.mask;
}

int parity_of(GrassMask m) { return __builtin_popcountll(m) % 2; }

}  // namespace

bool FiniteAlgebra::entry_allowed(int row, int col, int parity, int tpow) const {
    if (tpow >= t_order_) return false;
    switch (kind_) {
        case AlgKind::A:
            if (row == 1 && col == 0) return false;
            if (row == 0 && col == 0) return parity == 0;
            return true;
        case AlgKind::M11:
            return (row == col) ? parity == 0 : parity == 1;
        case AlgKind::UT2:
            return !(row == 1 && col == 0);
        case AlgKind::E:
            return row == 0 && col == 0;
        case AlgKind::Rp:
            if (row == 1 && col == 0) return false;
            if (row == 0 && col == 0) return parity == 0 && tpow == 0;
            if (row == 0 && col == 1) return true;
            return parity == 0 || tpow >= 1;  // (2,2): odd part needs a t factor
    }
    return false;
}

void FiniteAlgebra::enumerate_basis() {
    if (matrix_dim_ == 1) {
        positions_ = {{0, 0}};
    } else {
        positions_.clear();
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                bool any = false;
                for (int t = 0; t < t_order_ && !any; ++t)
                    for (int par = 0; par < 2 && !any; ++par)
                        if (entry_allowed(r, c, par, t)) any = true;
                if (any) positions_.emplace_back(r, c);
            }
    }
    for (const auto& [r, c] : positions_) {
        for (GrassMask mask = 0; mask < (GrassMask(1) << grass_rank_); ++mask)
            for (int t = 0; t < t_order_; ++t)
                if (entry_allowed(r, c, parity_of(mask), t)) {
                    basis_.push_back({r, c, t, mask});
                    lookup_[lookup_key(basis_.back())] = static_cast<int>(basis_.size()) - 1;
                }
    }
}

std::pair<int, int> FiniteAlgebra::mul_mono(int i, int j) const {
    const MonoBasisElt& a = basis_[static_cast<size_t>(i)];
    const MonoBasisElt& b = basis_[static_cast<size_t>(j)];
    if (a.col != b.row) return {0, -1};
    const int t = a.tpow + b.tpow;
    if (t >= t_order_) return {0, -1};
    if (a.mask & b.mask) return {0, -1};
    const MonoBasisElt prod{a.row, b.col, t, a.mask | b.mask};
    const int idx = index_of(prod);
    if (idx < 0)
        throw std::logic_error("FiniteAlgebra: basis product left the profile (construction bug)");
    return {merge_sign(a.mask, b.mask), idx};
}

int FiniteAlgebra::index_of(const MonoBasisElt& m) const {
    auto it = lookup_.find(lookup_key(m));
    return it == lookup_.end() ? -1 : it->second;
}

std::string FiniteAlgebra::basis_elt_str(int i) const {
    const MonoBasisElt& m = basis_[static_cast<size_t>(i)];
    std::string s;
    if (m.tpow == 1) s += "t*";
    else if (m.tpow > 1) s += "t^" + std::to_string(m.tpow) + "*";
    for (int b = 0; b < 64; ++b)
        if (m.mask & (GrassMask(1) << b)) s += "e{" + std::to_string(b + 1) + "}";
    if (matrix_dim_ == 2) {
        if (!s.empty() && s.back() != '*') s += "*";
        s += "E" + std::to_string(m.row + 1) + std::to_string(m.col + 1);
    } else if (s.empty()) {
        s = "1";
    } else if (s.back() == '*') {
        s.pop_back();
    }
    return s;
}

namespace {
AlgebraPtr finish(FiniteAlgebra&& raw) {
    auto p = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra(std::move(raw)));
    return p;
}
}  // namespace

AlgebraPtr FiniteAlgebra::make_A(int n) {
    if (n < 1) throw std::invalid_argument("A(n): n must be >= 1");
    FiniteAlgebra a;
    a.kind_ = AlgKind::A;
    a.name_ = "A(n=" + std::to_string(n) + ")";
    a.grass_rank_ = n;
    a.enumerate_basis();
    return finish(std::move(a));
}

AlgebraPtr FiniteAlgebra::make_M11(int k) {
    if (k < 1) throw std::invalid_argument("M11(k): k must be >= 1");
    FiniteAlgebra a;
    a.kind_ = AlgKind::M11;
    a.name_ = "M11(k=" + std::to_string(k) + ")";
    a.grass_rank_ = k;
    a.enumerate_basis();
    return finish(std::move(a));
}

AlgebraPtr FiniteAlgebra::make_UT2() {
    FiniteAlgebra a;
    a.kind_ = AlgKind::UT2;
    a.name_ = "UT2";
    a.grass_rank_ = 0;
    a.enumerate_basis();
    return finish(std::move(a));
}

AlgebraPtr FiniteAlgebra::make_E(int n) {
    if (n < 0) throw std::invalid_argument("E(n): n must be >= 0");
    FiniteAlgebra a;
    a.kind_ = AlgKind::E;
    a.name_ = "E(n=" + std::to_string(n) + ")";
    a.grass_rank_ = n;
    a.matrix_dim_ = 1;
    a.enumerate_basis();
    return finish(std::move(a));
}

AlgebraPtr FiniteAlgebra::make_Rp(int p, int d) {
    if (p < 2) throw std::invalid_argument("Rp(p,d): p must be >= 2");
    if (d < 1) throw std::invalid_argument("Rp(p,d): d must be >= 1");
    FiniteAlgebra a;
    a.kind_ = AlgKind::Rp;
    a.name_ = "Rp(p=" + std::to_string(p) + ",d=" + std::to_string(d) + ")";
    a.grass_rank_ = d;
    a.t_order_ = p;
    a.enumerate_basis();
    return finish(std::move(a));
}

AlgebraPtr FiniteAlgebra::parse(const std::string& spec) {
    auto params = [&](const std::string& body) {
        std::map<std::string, int> kv;
        size_t pos = 0;
        while (pos < body.size()) {
            size_t eq = body.find('=', pos);
            if (eq == std::string::npos)
                throw std::invalid_argument("algebra spec: expected key=value in '" + spec + "'");
            size_t comma = body.find(',', eq);
            if (comma == std::string::npos) comma = body.size();
            kv[body.substr(pos, eq - pos)] = std::stoi(body.substr(eq + 1, comma - eq - 1));
            pos = comma == body.size() ? comma : comma + 1;
        }
        return kv;
    };
    const size_t open = spec.find('(');
    const std::string head = spec.substr(0, open == std::string::npos ? spec.size() : open);
    std::map<std::string, int> kv;
    if (open != std::string::npos) {
        const size_t close = spec.rfind(')');
        if (close == std::string::npos || close < open)
            throw std::invalid_argument("algebra spec: unbalanced parentheses in '" + spec + "'");
        kv = params(spec.substr(open + 1, close - open - 1));
    }
    auto need = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("algebra spec '" + spec + "': missing parameter " + key);
        return it->second;
    };
    if (head == "A") return make_A(need("n"));
    if (head == "M11") return make_M11(need("k"));
    if (head == "UT2") return make_UT2();
    if (head == "E") return make_E(need("n"));
    if (head == "Rp") return make_Rp(need("p"), need("d"));
    throw std::invalid_argument("algebra spec: unknown algebra '" + head + "'");
}

AlgElement AlgElement::basis_element(const AlgebraPtr& alg, int index, Scalar c) {
    AlgElement e(alg);
    e.add(index, c);
    return e;
}

AlgElement AlgElement::unit(const AlgebraPtr& alg) {
    AlgElement e(alg);
    for (int d = 0; d < alg->matrix_dim(); ++d) {
        const int idx = alg->index_of({d, d, 0, 0});
        if (idx < 0) throw std::logic_error("unit: diagonal basis element missing");
        e.add(idx, Scalar(1));
    }
    return e;
}

AlgElement AlgElement::from_entry(const AlgebraPtr& alg, int row, int col,
                                  const GrassmannElement& value, int tpow) {
    AlgElement e(alg);
    for (const auto& [mask, c] : value.terms()) {
        const int idx = alg->index_of({row, col, tpow, mask});
        if (idx < 0)
            throw std::invalid_argument("from_entry: value violates the profile of " + alg->name());
        e.add(idx, c);
    }
    return e;
}

void AlgElement::add(int index, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = coords_.find(index);
    if (it == coords_.end()) {
        coords_.emplace(index, c);
    } else {
        it->second += c;
        if (piv::is_zero(it->second)) coords_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("AlgElement: algebra mismatch");
    AlgElement r = *this;
    for (const auto& [i, c] : o.coords_) r.add(i, c);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("AlgElement: algebra mismatch");
    AlgElement r = *this;
    for (const auto& [i, c] : o.coords_) r.add(i, -c);
    return r;
}

AlgElement operator*(const Scalar& c, const AlgElement& g) {
    AlgElement r(g.alg_);
    for (const auto& [i, gc] : g.coords_) r.add(i, c * gc);
    return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
    return alg_ == o.alg_ && coords_ == o.coords_;
}

std::map<int, GrassmannElement> AlgElement::entry(int row, int col) const {
    std::map<int, GrassmannElement> out;
    for (const auto& [i, c] : coords_) {
        const MonoBasisElt& m = alg_->basis()[static_cast<size_t>(i)];
        if (m.row != row || m.col != col) continue;
        auto it = out.find(m.tpow);
        if (it == out.end())
            it = out.emplace(m.tpow, GrassmannElement::zero(alg_->grass_rank())).first;
        it->second.add_term(m.mask, c);
    }
    return out;
}

std::string AlgElement::str() const {
    if (coords_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : coords_) {
        const bool neg = sgn(c) < 0;
        const Scalar mag = neg ? Scalar(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += scalar_str(mag) + "*";
        out += alg_->basis_elt_str(i);
    }
    return out;
}

AlgElement a_mul(const AlgElement& x, const AlgElement& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("a_mul: elements from different algebras");
    AlgElement r(x.algebra());
    const auto& alg = *x.algebra();
    for (const auto& [i, ci] : x.coords()) {
        for (const auto& [j, cj] : y.coords()) {
            const auto [sign, idx] = alg.mul_mono(i, j);
            if (idx < 0) continue;
            r.add(idx, sign > 0 ? ci * cj : -(ci * cj));
        }
    }
    return r;
}

AlgElement a_mul_via_matrix(const AlgElement& x, const AlgElement& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("a_mul: elements from different algebras");
    const auto& alg = x.algebra();
    const int dim = alg->matrix_dim();
    const int p = alg->t_order();
    AlgElement out(alg);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            for (int k = 0; k < dim; ++k) {
                const auto xe = x.entry(r, k);
                const auto ye = y.entry(k, c);
                for (const auto& [ta, ga] : xe)
                    for (const auto& [tb, gb] : ye) {
                        if (ta + tb >= p) continue;
                        const GrassmannElement prod = g_mul(ga, gb);
                        if (prod.is_zero()) continue;
                        out = out + AlgElement::from_entry(alg, r, c, prod, ta + tb);
                    }
            }
        }
    }
    return out;
}

std::vector<AlgElement> representative_slot_options(Profile profile, int m, int slot,
                                                    const AlgebraPtr& alg) {
    const int g1 = 2 * slot - 1, g2 = 2 * slot;
    const int rank = alg->grass_rank();
    const GrassmannElement one = GrassmannElement::one(rank);
    const GrassmannElement ea = GrassmannElement::generator(rank, g1);
    const GrassmannElement eab = g_mul(ea, GrassmannElement::generator(rank, g2));
    (void)m;
    std::vector<AlgElement> out;
    auto entry = [&](int r, int c, const GrassmannElement& v) {
        out.push_back(AlgElement::from_entry(alg, r, c, v));
    };
    switch (profile) {
        case Profile::A:
            entry(0, 0, one);
            entry(0, 0, eab);
            entry(0, 1, one);
            entry(0, 1, ea);
            entry(0, 1, eab);
            entry(1, 1, one);
            entry(1, 1, ea);
            entry(1, 1, eab);
            break;
        case Profile::M11:
            entry(0, 0, one);
            entry(0, 0, eab);
            entry(0, 1, ea);
            entry(1, 0, ea);
            entry(1, 1, one);
            entry(1, 1, eab);
            break;
        case Profile::E:
            entry(0, 0, one);
            entry(0, 0, ea);
            entry(0, 0, eab);
            break;
    }
    return out;
}

AlgebraPtr profile_truncation(Profile profile, int m) {
    switch (profile) {
        case Profile::A: return FiniteAlgebra::make_A(2 * m);
        case Profile::M11: return FiniteAlgebra::make_M11(2 * m);
        case Profile::E: return FiniteAlgebra::make_E(2 * m);
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<AlgElement>> representative_tuples(Profile profile, int m) {
    if (m < 1) throw std::invalid_argument("representative_tuples: m must be >= 1");
    const AlgebraPtr alg = profile_truncation(profile, m);
    std::vector<std::vector<AlgElement>> slot_options;
    for (int slot = 1; slot <= m; ++slot)
        slot_options.push_back(representative_slot_options(profile, m, slot, alg));

    std::vector<std::vector<AlgElement>> tuples;
    std::vector<size_t> pick(static_cast<size_t>(m), 0);
    while (true) {
        std::vector<AlgElement> tuple;
        tuple.reserve(static_cast<size_t>(m));
        for (int s = 0; s < m; ++s) tuple.push_back(slot_options[static_cast<size_t>(s)][pick[static_cast<size_t>(s)]]);
        tuples.push_back(std::move(tuple));
        int k = m;
        while (k > 0) {
            --k;
            if (++pick[static_cast<size_t>(k)] < slot_options[static_cast<size_t>(k)].size()) break;
            pick[static_cast<size_t>(k)] = 0;
            if (k == 0) { k = -1; break; }
        }
        if (k == -1) break;
    }
    return tuples;
}

std::string profile_name(Profile p) {
    switch (p) {
        case Profile::A: return "A";
        case Profile::M11: return "M11";
        case Profile::E: return "E";
    }
    return "?";
}

}  // namespace piv
