#include "piv/engine.hpp"

#include "piv/combin.hpp"
#include "piv/text.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace piv {

std::string EvalTarget::name() const {
    if (is_profile()) return "profile:" + profile_name(profile());
    return algebra()->name();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

AlgElement evaluate(const MultilinearPoly& f, const std::vector<AlgElement>& tuple) {
    if (static_cast<int>(tuple.size()) != f.degree())
        throw std::invalid_argument("evaluate: tuple length differs from the degree");
    for (const auto& e : tuple)
        if (e.algebra() != tuple.front().algebra())
            throw std::invalid_argument("evaluate: tuple elements from different algebras");
    AlgElement acc(tuple.front().algebra());
    for (std::uint64_t r = 0; r < f.width(); ++r) {
        const Scalar& c = f.coeffs()[r];
        if (is_zero(c)) continue;
        const auto word = perm_unrank(f.degree(), r);
        AlgElement prod = tuple[static_cast<size_t>(word[0] - 1)];
        for (size_t k = 1; k < word.size(); ++k)
            prod = a_mul(prod, tuple[static_cast<size_t>(word[k] - 1)]);
        acc = acc + c * prod;
    }
    return acc;
}

AlgElement evaluate_nc(const NCPoly& f, const std::map<int, AlgElement>& assignment) {
    if (assignment.empty()) throw std::invalid_argument("evaluate_nc: empty assignment");
    const AlgebraPtr alg = assignment.begin()->second.algebra();
    AlgElement acc(alg);
    for (const auto& [w, c] : f.terms()) {
        AlgElement prod = AlgElement::unit(alg);
        for (int v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("evaluate_nc: no assignment for x" + std::to_string(v));
            prod = a_mul(prod, it->second);
        }
        acc = acc + c * prod;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Identity decisions on explicit tuples
// ---------------------------------------------------------------------------

namespace {

struct FTerm {
    std::vector<int> word;  // letters 1..n
    Scalar coeff;
};

std::vector<FTerm> nonzero_terms(const MultilinearPoly& f) {
    std::vector<FTerm> terms;
    for (std::uint64_t r = 0; r < f.width(); ++r)
        if (!is_zero(f.coeffs()[r])) terms.push_back({perm_unrank(f.degree(), r), f.coeffs()[r]});
    return terms;
}

/// f at a tuple of basis monomials, through the monomial product table.
std::map<int, Scalar> eval_on_basis_tuple(const FiniteAlgebra& alg,
                                          const std::vector<FTerm>& terms,
                                          const std::vector<int>& tuple) {
    std::map<int, Scalar> acc;
    for (const auto& t : terms) {
        int sign = 1;
        int idx = tuple[static_cast<size_t>(t.word[0] - 1)];
        for (size_t k = 1; k < t.word.size() && idx >= 0; ++k) {
            const auto [s, next] = alg.mul_mono(idx, tuple[static_cast<size_t>(t.word[k] - 1)]);
            sign *= s;
            idx = next;
        }
        if (idx < 0) continue;
        auto it = acc.find(idx);
        if (it == acc.end()) {
            acc.emplace(idx, sign > 0 ? t.coeff : -t.coeff);
        } else {
            it->second += sign > 0 ? t.coeff : -t.coeff;
            if (is_zero(it->second)) acc.erase(it);
        }
    }
    return acc;
}

IdentityVerdict falsified_by(const AlgebraPtr& alg, const std::vector<int>& tuple,
                             const std::map<int, Scalar>& value) {
    IdentityVerdict v;
    v.is_identity = false;
    v.witness_algebra = alg->name();
    v.witness_indices = tuple;
    for (int idx : tuple)
        v.witness_elements.push_back(alg->basis_elt_str(idx));
    AlgElement val(alg);
    for (const auto& [i, c] : value) val.add(i, c);
    v.witness_value = val.str();
    return v;
}

}  // namespace

IdentityVerdict is_identity_exhaustive(const MultilinearPoly& f, const AlgebraPtr& alg) {
    const int n = f.degree();
    const auto terms = nonzero_terms(f);
    const auto& basis = alg->basis();
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    IdentityVerdict out;

    // Lexicographic sweep over basis tuples. Tuples with overlapping masks or
    // excessive t degree evaluate to zero identically and are skipped; that
    // never skips a falsifying tuple.
    std::function<bool(int, GrassMask, int)> rec = [&](int slot, GrassMask used, int tsum) -> bool {
        if (slot == n) {
            auto value = eval_on_basis_tuple(*alg, terms, tuple);
            if (value.empty()) return false;
            out = falsified_by(alg, tuple, value);
            return true;
        }
        for (int i = 0; i < alg->dim(); ++i) {
            const MonoBasisElt& m = basis[static_cast<size_t>(i)];
            if (m.mask & used) continue;
            if (tsum + m.tpow >= alg->t_order()) continue;
            tuple[static_cast<size_t>(slot)] = i;
            if (rec(slot + 1, used | m.mask, tsum + m.tpow)) return true;
        }
        return false;
    };
    if (!rec(0, 0, 0)) out.is_identity = true;
    return out;
}

IdentityVerdict is_identity_representative(const MultilinearPoly& f, Profile profile) {
    const int n = f.degree();
    const auto terms = nonzero_terms(f);
    const AlgebraPtr alg = profile_truncation(profile, n);
    std::vector<std::vector<int>> slot_idx;
    for (int slot = 1; slot <= n; ++slot) {
        std::vector<int> idx;
        for (const auto& e : representative_slot_options(profile, n, slot, alg))
            idx.push_back(e.coords().begin()->first);
        slot_idx.push_back(std::move(idx));
    }
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    IdentityVerdict out;
    std::function<bool(int)> rec = [&](int slot) -> bool {
        if (slot == n) {
            auto value = eval_on_basis_tuple(*alg, terms, tuple);
            if (value.empty()) return false;
            out = falsified_by(alg, tuple, value);
            return true;
        }
        for (int i : slot_idx[static_cast<size_t>(slot)]) {
            tuple[static_cast<size_t>(slot)] = i;
            if (rec(slot + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) out.is_identity = true;
    return out;
}

namespace {

int sign_on_odd_positions(const std::vector<int>& word, unsigned parity_mask) {
    // Inversions of the word restricted to the letters marked odd.
    int inv = 0;
    const int n = static_cast<int>(word.size());
    for (int i = 0; i < n; ++i) {
        if (!(parity_mask & (1u << (word[static_cast<size_t>(i)] - 1)))) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!(parity_mask & (1u << (word[static_cast<size_t>(j)] - 1)))) continue;
            if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(j)]) ++inv;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

IdentityVerdict is_identity_E(const MultilinearPoly& f) {
    const int n = f.degree();
    const auto terms = nonzero_terms(f);
    for (unsigned p = 0; p < (1u << n); ++p) {
        Scalar acc(0);
        for (const auto& t : terms)
            acc += Scalar(sign_on_odd_positions(t.word, p)) * t.coeff;
        if (is_zero(acc)) continue;

        IdentityVerdict v;
        v.is_identity = false;
        const int odd = __builtin_popcount(p);
        const AlgebraPtr alg = FiniteAlgebra::make_E(std::max(odd, 1));
        v.witness_algebra = alg->name();
        int next_gen = 0;
        GrassMask all = 0;
        for (int slot = 0; slot < n; ++slot) {
            GrassMask mask = 0;
            if (p & (1u << slot)) {
                mask = GrassMask(1) << next_gen;
                ++next_gen;
                all |= mask;
            }
            const int idx = alg->index_of({0, 0, 0, mask});
            v.witness_indices.push_back(idx);
            v.witness_elements.push_back(alg->basis_elt_str(idx));
        }
        v.witness_value = AlgElement::basis_element(alg, alg->index_of({0, 0, 0, all}), acc).str();
        return v;
    }
    IdentityVerdict v;
    v.is_identity = true;
    return v;
}

// ---------------------------------------------------------------------------
// Constraint rows
// ---------------------------------------------------------------------------

namespace {

struct SlotOption {
    int row, col, parity, tpow;
};

std::vector<SlotOption> slot_option_list(const EvalTarget& target) {
    std::vector<SlotOption> opts;
    if (target.is_profile()) {
        switch (target.profile()) {
            case Profile::A:
                opts = {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}};
                break;
            case Profile::M11:
                opts = {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}};
                break;
            case Profile::E:
                opts = {{0, 0, 0, 0}, {0, 0, 1, 0}};
                break;
        }
        return opts;
    }
    const auto& alg = *target.algebra();
    for (const auto& [r, c] : alg.positions())
        for (int par = 0; par < 2; ++par) {
            if (par == 1 && alg.grass_rank() < 1) continue;
            for (int t = 0; t < alg.t_order(); ++t)
                if (alg.entry_allowed(r, c, par, t)) opts.push_back({r, c, par, t});
        }
    return opts;
}

/// Evaluation rows of one pattern tuple, one dense row per output position.
/// row[sigma-rank] = parity sign of the ordering when the product chain is
/// position-compatible, else 0.
void pattern_rows(const std::vector<SlotOption>& pat, int n,
                  std::vector<std::vector<long long>>& rows /*indexed by 2*row+col*/) {
    for (auto& r : rows) r.clear();
    std::vector<int> seq(static_cast<size_t>(n));
    std::function<void(int, unsigned, unsigned, int)> dfs = [&](int k, unsigned used,
                                                                unsigned placed_odd, int sign) {
        if (k == n) {
            const auto& first = pat[static_cast<size_t>(seq[0] - 1)];
            const auto& last = pat[static_cast<size_t>(seq[static_cast<size_t>(n - 1)] - 1)];
            const int q = first.row * 2 + last.col;
            auto& row = rows[static_cast<size_t>(q)];
            if (row.empty()) row.assign(factorial(n), 0);
            row[perm_rank(seq)] += sign;
            return;
        }
        const int prev_col =
            k == 0 ? -1 : pat[static_cast<size_t>(seq[static_cast<size_t>(k - 1)] - 1)].col;
        for (int s = 0; s < n; ++s) {
            if (used & (1u << s)) continue;
            const auto& o = pat[static_cast<size_t>(s)];
            if (k > 0 && o.row != prev_col) continue;
            int sgn2 = sign;
            if (o.parity == 1 && (__builtin_popcount(placed_odd >> (s + 1)) % 2)) sgn2 = -sgn2;
            seq[static_cast<size_t>(k)] = s + 1;
            dfs(k + 1, used | (1u << s), o.parity ? placed_odd | (1u << s) : placed_odd, sgn2);
        }
    };
    dfs(0, 0, 0, 1);
}

SparseRowInt sparsify(const std::vector<long long>& dense);

using DenseRow = std::vector<long long>;

SparseIntRow sparsify_dense(const DenseRow& dense) {
    SparseIntRow r;
    for (size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) r.emplace_back(static_cast<int>(i), dense[i]);
    return r;
}

void canonicalize_sign(SparseIntRow& r) {
    if (r.empty()) return;
    if (r.front().second < 0)
        for (auto& [i, c] : r) c = -c;
}

/// Enumerates the (budget-pruned) pattern tuples and hands each one's rows,
/// already restricted to proper coordinates when requested, to the sink.
void generate_constraint_rows(const EvalTarget& target, int n, bool proper,
                              const ProperBasis* pb, int threads,
                              const std::function<void(SparseIntRow&&)>& sink) {
    const auto opts = slot_option_list(target);
    const int gen_budget = target.is_profile() ? n : target.algebra()->grass_rank();
    const int t_budget =
        target.is_profile() ? 0 : target.algebra()->t_order() - 1;

    // Materialize the valid pattern tuples first so work can be chunked.
    std::vector<std::vector<SlotOption>> tuples;
    std::vector<SlotOption> cur(static_cast<size_t>(n));
    std::function<void(int, int, int)> enumerate = [&](int slot, int odd, int tsum) {
        if (slot == n) {
            tuples.push_back(cur);
            return;
        }
        for (const auto& o : opts) {
            if (odd + o.parity > gen_budget) continue;
            if (tsum + o.tpow > t_budget) continue;
            cur[static_cast<size_t>(slot)] = o;
            enumerate(slot + 1, odd + o.parity, tsum + o.tpow);
        }
    };
    enumerate(0, 0, 0);

    auto rows_of = [&](const std::vector<SlotOption>& pat, std::vector<SparseIntRow>& out) {
        std::vector<DenseRow> rows(4);
        pattern_rows(pat, n, rows);
        for (const auto& dense : rows) {
            if (dense.empty()) continue;
            SparseIntRow r;
            if (proper) {
                r = pb->restrict_functional(dense);
            } else {
                r = sparsify_dense(dense);
            }
            if (r.empty()) continue;
            canonicalize_sign(r);
            out.push_back(std::move(r));
        }
    };

    if (threads <= 1 || tuples.size() < 64) {
        std::vector<SparseIntRow> buf;
        for (const auto& pat : tuples) {
            buf.clear();
            rows_of(pat, buf);
            for (auto& r : buf) sink(std::move(r));
        }
        return;
    }

    const size_t nt = static_cast<size_t>(threads);
    std::vector<std::vector<SparseIntRow>> chunk_rows(tuples.size());
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (size_t w = 0; w < nt; ++w)
        workers.emplace_back([&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= tuples.size()) break;
                rows_of(tuples[i], chunk_rows[i]);
            }
        });
    for (auto& th : workers) th.join();
    for (auto& rows : chunk_rows)
        for (auto& r : rows) sink(std::move(r));
}

}  // namespace

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace::Subspace(int degree, bool proper, int coord_width, DenseRowSpace annihilator,
                   std::vector<std::vector<Integer>> primal)
    : degree_(degree),
      proper_(proper),
      coord_width_(coord_width),
      annihilator_(std::move(annihilator)),
      primal_(std::move(primal)) {}

bool Subspace::contains_coords(const std::vector<Scalar>& v) const {
    for (const auto& row : annihilator_.rows()) {
        Scalar acc(0);
        for (int i = 0; i < coord_width_; ++i)
            if (!is_zero(v[static_cast<size_t>(i)]) && !is_zero(row[static_cast<size_t>(i)]))
                acc += v[static_cast<size_t>(i)] * row[static_cast<size_t>(i)];
        if (!is_zero(acc)) return false;
    }
    return true;
}

bool Subspace::contains(const MultilinearPoly& f) const {
    if (f.degree() != degree_)
        throw std::invalid_argument("Subspace::contains: degree mismatch");
    if (!proper_) return contains_coords(f.coeffs());
    const auto pb = proper_basis(degree_);
    auto gamma = pb->gamma_coords(f.coeffs());
    if (!gamma.has_value()) return false;  // not even a proper polynomial
    return contains_coords(*gamma);
}

DenseRowSpace Subspace::monomial_rref() const {
    const int ambient = static_cast<int>(factorial(degree_));
    DenseRowSpace out(ambient);
    const auto pb = proper_ ? proper_basis(degree_) : nullptr;
    for (const auto& row : primal_) {
        std::vector<Scalar> coords(row.size());
        for (size_t i = 0; i < row.size(); ++i) coords[i] = Scalar(row[i]);
        out.insert(proper_ ? pb->expand(coords) : std::move(coords));
    }
    return out;
}

bool Subspace::same_space(const Subspace& o) const {
    return degree_ == o.degree_ && proper_ == o.proper_ && coord_width_ == o.coord_width_ &&
           annihilator_ == o.annihilator_;
}

std::string verdict_name(CompareVerdict v) {
    switch (v) {
        case CompareVerdict::Equal: return "equal";
        case CompareVerdict::LhsStrictlySmaller: return "lhs_strictly_smaller";
        case CompareVerdict::RhsStrictlySmaller: return "rhs_strictly_smaller";
        case CompareVerdict::Incomparable: return "incomparable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

std::string space_key(const EvalTarget& t, int n, bool proper) {
    return "I|" + t.name() + "|" + std::to_string(n) + (proper ? "|P" : "|F");
}

std::string tideal_key(const std::vector<NCPoly>& gens, int n, bool proper) {
    std::string key = "T|";
    for (const auto& g : gens) key += format_poly(g) + ";";
    return key + std::to_string(n) + (proper ? "|P" : "|F");
}

Subspace make_subspace(int n, bool proper, KernelAccumulator&& acc) {
    return Subspace(n, proper, acc.width(), acc.span_rref(), acc.kernel_rows());
}

}  // namespace

SubspacePtr Engine::identity_space(const EvalTarget& target, int n, bool proper) {
    const std::string key = space_key(target, n, proper);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto space = build_identity_space(target, n, proper);
    cache_.emplace(key, space);
    return space;
}

SubspacePtr Engine::build_identity_space(const EvalTarget& target, int n, bool proper) {
    if (n < 1) throw std::invalid_argument("identity_space: degree must be >= 1");
    if (proper && n < 2) throw std::invalid_argument("identity_space: proper requires degree >= 2");
    const auto pb = proper ? proper_basis(n) : nullptr;
    const int width = proper ? pb->dim() : static_cast<int>(factorial(n));
    KernelAccumulator acc(width);
    std::set<SparseIntRow> seen;
    generate_constraint_rows(target, n, proper, pb.get(), opts_.threads,
                             [&](SparseIntRow&& row) {
                                 if (seen.insert(row).second) acc.insert(row);
                             });
    return std::make_shared<Subspace>(make_subspace(n, proper, std::move(acc)));
}

SubspacePtr Engine::identity_space_sweep(const AlgebraPtr& alg, int n, bool proper) {
    if (n < 1) throw std::invalid_argument("identity_space_sweep: degree must be >= 1");
    const auto pb = proper ? proper_basis(n) : nullptr;
    const int width = proper ? pb->dim() : static_cast<int>(factorial(n));
    KernelAccumulator acc(width);
    std::set<SparseIntRow> seen;

    const auto perms = all_permutations(n);
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    std::map<int, DenseRow> rows;
    std::function<void(int, GrassMask, int)> rec = [&](int slot, GrassMask used, int tsum) {
        if (slot == n) {
            rows.clear();
            for (const auto& sigma : perms) {
                int sign = 1;
                int idx = tuple[static_cast<size_t>(sigma(1) - 1)];
                for (int k = 2; k <= n && idx >= 0; ++k) {
                    const auto [s, nxt] = alg->mul_mono(idx, tuple[static_cast<size_t>(sigma(k) - 1)]);
                    sign *= s;
                    idx = nxt;
                }
                if (idx < 0) continue;
                auto it = rows.find(idx);
                if (it == rows.end()) it = rows.emplace(idx, DenseRow(factorial(n), 0)).first;
                it->second[perm_rank(sigma.images())] += sign;
            }
            for (const auto& [outIdx, dense] : rows) {
                SparseIntRow r = proper ? pb->restrict_functional(dense) : sparsify_dense(dense);
                if (r.empty()) continue;
                canonicalize_sign(r);
                if (seen.insert(r).second) acc.insert(r);
            }
            return;
        }
        for (int i = 0; i < alg->dim(); ++i) {
            const MonoBasisElt& m = alg->basis()[static_cast<size_t>(i)];
            if (m.mask & used) continue;
            if (tsum + m.tpow >= alg->t_order()) continue;
            tuple[static_cast<size_t>(slot)] = i;
            rec(slot + 1, used | m.mask, tsum + m.tpow);
        }
    };
    rec(0, 0, 0);
    return std::make_shared<Subspace>(make_subspace(n, proper, std::move(acc)));
}

// ---------------------------------------------------------------------------
// T-ideal components
// ---------------------------------------------------------------------------

namespace {

/// All multilinear degree-n instances u g(w_1..w_k) v of a multilinear
/// generator g: ordered set partitions of a subset S into k nonempty blocks
/// (one word per slot, every arrangement), border words over the complement
/// in every order and split.
void enumerate_instances(const std::vector<FTerm>& gen_terms, int k, int n,
                         const std::function<void(const SparseIntRow&)>& sink) {
    if (k > n) return;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;

    for (unsigned smask = 0; smask < (1u << n); ++smask) {
        if (__builtin_popcount(smask) < k) continue;
        std::vector<int> selems, celems;
        for (int i = 0; i < n; ++i)
            ((smask >> i) & 1 ? selems : celems).push_back(i + 1);

        // Ordered partitions of selems into k nonempty blocks.
        std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
        std::function<void(std::vector<int>&, int)> part = [&](std::vector<int>& rest, int slot) {
            if (slot == k) {
                if (!rest.empty()) return;
                // Arrangements within each block (odometer over permutations).
                std::vector<std::vector<std::vector<int>>> arr(static_cast<size_t>(k));
                for (int j = 0; j < k; ++j) {
                    std::vector<int> b = blocks[static_cast<size_t>(j)];
                    do arr[static_cast<size_t>(j)].push_back(b);
                    while (std::next_permutation(b.begin(), b.end()));
                }
                std::vector<size_t> pick(static_cast<size_t>(k), 0);
                while (true) {
                    // Border words: all permutations of the complement, all splits.
                    std::vector<int> border = celems;
                    std::vector<std::vector<int>> borders;
                    if (border.empty()) borders.push_back({});
                    else {
                        std::vector<int> b = border;
                        do borders.push_back(b);
                        while (std::next_permutation(b.begin(), b.end()));
                    }
                    for (const auto& bord : borders) {
                        for (size_t split = 0; split <= bord.size(); ++split) {
                            std::map<int, long long> row;
                            for (const auto& t : gen_terms) {
                                std::vector<int> word(bord.begin(),
                                                      bord.begin() + static_cast<std::ptrdiff_t>(split));
                                for (int letter : t.word) {
                                    const auto& w = arr[static_cast<size_t>(letter - 1)]
                                                       [pick[static_cast<size_t>(letter - 1)]];
                                    word.insert(word.end(), w.begin(), w.end());
                                }
                                word.insert(word.end(),
                                            bord.begin() + static_cast<std::ptrdiff_t>(split),
                                            bord.end());
                                if (!is_integer(t.coeff))
                                    throw std::logic_error("tideal: non-integer generator coefficient");
                                row[static_cast<int>(perm_rank(word))] +=
                                    t.coeff.get_num().get_si();
                            }
                            SparseIntRow r;
                            for (const auto& [i, c] : row)
                                if (c != 0) r.emplace_back(i, c);
                            if (!r.empty()) sink(r);
                        }
                    }
                    size_t j = static_cast<size_t>(k);
                    bool done = false;
                    while (true) {
                        if (j == 0) { done = true; break; }
                        --j;
                        if (++pick[j] < arr[j].size()) break;
                        pick[j] = 0;
                    }
                    if (done) break;
                }
                return;
            }
            const int need_rest = k - slot - 1;
            const int msize = static_cast<int>(rest.size());
            for (unsigned bm = 1; bm < (1u << msize); ++bm) {
                if (static_cast<int>(rest.size()) - __builtin_popcount(bm) < need_rest) continue;
                std::vector<int> block, remaining;
                for (int i = 0; i < msize; ++i)
                    ((bm >> i) & 1 ? block : remaining).push_back(rest[static_cast<size_t>(i)]);
                blocks[static_cast<size_t>(slot)] = block;
                part(remaining, slot + 1);
            }
        };
        part(selems, 0);
    }
}

}  // namespace

SubspacePtr Engine::tideal_component(const std::vector<NCPoly>& gens, int n, bool proper) {
    const std::string key = tideal_key(gens, n, proper);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto space = build_tideal(gens, n, proper);
    cache_.emplace(key, space);
    return space;
}

SubspacePtr Engine::build_tideal(const std::vector<NCPoly>& gens, int n, bool proper) {
    if (n < 1) throw std::invalid_argument("tideal_component: degree must be >= 1");
    const int width = static_cast<int>(factorial(n));
    KernelAccumulator acc(width);
    std::set<SparseIntRow> seen;
    for (const auto& g : gens) {
        const MultilinearPoly m = multilinearize(g);
        if (m.degree() > n) continue;
        enumerate_instances(nonzero_terms(m), m.degree(), n, [&](const SparseIntRow& row) {
            SparseIntRow r = row;
            canonicalize_sign(r);
            if (seen.insert(r).second) acc.insert(r);
        });
    }

    if (!proper) {
        // Annihilator of the component is the kernel of the instance span.
        DenseRowSpace ann = acc.kernel_rref();
        std::vector<std::vector<Integer>> primal;
        for (const auto& r : acc.accepted()) {
            std::vector<Integer> dense(static_cast<size_t>(width));
            for (const auto& [i, c] : r) dense[static_cast<size_t>(i)] = c;
            primal.push_back(std::move(dense));
        }
        return std::make_shared<Subspace>(n, false, width, std::move(ann), std::move(primal));
    }

    // Proper part: functionals annihilating the component, restricted to the
    // proper basis; the component's proper intersection is their kernel.
    const auto pb = proper_basis(n);
    KernelAccumulator gamma_acc(pb->dim());
    for (const auto& kr : acc.kernel_rows()) {
        SparseIntRow restricted = pb->restrict_functional_integer(kr);
        canonicalize_sign(restricted);
        if (!restricted.empty()) gamma_acc.insert(restricted);
    }
    return std::make_shared<Subspace>(make_subspace(n, true, std::move(gamma_acc)));
}

std::uint64_t Engine::gamma_dim(const EvalTarget& target, int n) {
    if (n < 2) throw std::invalid_argument("gamma_dim: degree must be >= 2");
    auto space = identity_space(target, n, true);
    return derangements(n) - static_cast<std::uint64_t>(space->dim());
}

std::uint64_t Engine::codim(const EvalTarget& target, int n) {
    auto space = identity_space(target, n, false);
    return factorial(n) - static_cast<std::uint64_t>(space->dim());
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

namespace {

/// A primal basis row of `from` that the annihilator of `other` does not
/// kill, i.e. a vector in `from` and not in `other`.
std::string witness_from(const Subspace& from, const Subspace& other) {
    const auto pb = from.proper() ? proper_basis(from.degree()) : nullptr;
    for (const auto& row : from.primal_rows()) {
        std::vector<Scalar> coords(row.size());
        for (size_t i = 0; i < row.size(); ++i) coords[i] = Scalar(row[i]);
        if (other.contains_coords(coords)) continue;
        std::vector<Scalar> ambient = from.proper() ? pb->expand(coords) : coords;
        MultilinearPoly poly(from.degree());
        poly.coeffs() = ambient;
        return format_poly(primitive_integer_scale(poly.to_ncpoly()));
    }
    return "";
}

}  // namespace

CompareResult Engine::compare(const Subspace& lhs, const Subspace& rhs) const {
    if (lhs.degree() != rhs.degree() || lhs.proper() != rhs.proper() ||
        lhs.coord_width() != rhs.coord_width())
        throw std::invalid_argument("compare: spaces live at different degrees");
    CompareResult res;
    if (lhs.same_space(rhs)) {
        res.verdict = CompareVerdict::Equal;
        return res;
    }
    // lhs <= rhs iff every annihilator functional of rhs already lies in the
    // span of lhs's annihilator.
    auto contained = [](const Subspace& a, const Subspace& b) {
        for (const auto& row : b.annihilator().rows())
            if (!a.annihilator().contains(row)) return false;
        return true;
    };
    const bool l_in_r = contained(lhs, rhs);
    const bool r_in_l = contained(rhs, lhs);
    if (l_in_r) {
        res.verdict = CompareVerdict::LhsStrictlySmaller;
        res.witness_poly = witness_from(rhs, lhs);
        res.witness_in_lhs = false;
    } else if (r_in_l) {
        res.verdict = CompareVerdict::RhsStrictlySmaller;
        res.witness_poly = witness_from(lhs, rhs);
        res.witness_in_lhs = true;
    } else {
        res.verdict = CompareVerdict::Incomparable;
        res.witness_poly = witness_from(lhs, rhs);
        res.witness_in_lhs = true;
    }
    return res;
}

}  // namespace piv
