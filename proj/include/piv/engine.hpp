#pragma once

#include "piv/algebra.hpp"
#include "piv/multilinear.hpp"
#include "piv/proper.hpp"
#include "piv/rowspace.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace piv {

/// What a polynomial is evaluated on: a finite algebra swept over its basis,
/// or an infinite-rank profile handled through parity representatives.
class EvalTarget {
public:
    EvalTarget(AlgebraPtr a) : target_(std::move(a)) {}
    EvalTarget(Profile p) : target_(p) {}

    bool is_profile() const { return std::holds_alternative<Profile>(target_); }
    Profile profile() const { return std::get<Profile>(target_); }
    const AlgebraPtr& algebra() const { return std::get<AlgebraPtr>(target_); }

    std::string name() const;

private:
    std::variant<AlgebraPtr, Profile> target_;
};

struct IdentityVerdict {
    bool is_identity = true;
    std::string witness_algebra;           // algebra the witness lives in
    std::vector<int> witness_indices;      // basis indices, one per slot
    std::vector<std::string> witness_elements;
    std::string witness_value;             // rendered nonzero value
};

/// Sum over monomials of coefficient times the ordered product.
AlgElement evaluate(const MultilinearPoly& f, const std::vector<AlgElement>& tuple);

/// Substitution evaluation for non-multilinear replays (repeated variables
/// are substituted directly, no polarization).
AlgElement evaluate_nc(const NCPoly& f, const std::map<int, AlgElement>& assignment);

/// Exhaustive decision over all basis tuples of a finite algebra. Sound and
/// complete for multilinear input; the first falsifying tuple in
/// lexicographic basis order is the witness.
IdentityVerdict is_identity_exhaustive(const MultilinearPoly& f, const AlgebraPtr& alg);

/// Decision over the per-slot representative tuples of an infinite profile.
IdentityVerdict is_identity_representative(const MultilinearPoly& f, Profile profile);

/// Identities of the infinite Grassmann algebra by the parity calculus: f is
/// an identity iff the signed monomial sum vanishes for every parity vector.
IdentityVerdict is_identity_E(const MultilinearPoly& f);

/// Subspace of P_n (or of its proper part, in coordinates over the cached
/// proper basis). Stored through its annihilator in canonical reduced
/// echelon form, so equal subspaces compare equal rowwise; a primal basis is
/// kept for witness extraction.
class Subspace {
public:
    Subspace(int degree, bool proper, int coord_width,
             DenseRowSpace annihilator, std::vector<std::vector<Integer>> primal);

    int degree() const { return degree_; }
    bool proper() const { return proper_; }
    int coord_width() const { return coord_width_; }
    int dim() const { return coord_width_ - annihilator_.rank(); }

    const DenseRowSpace& annihilator() const { return annihilator_; }
    const std::vector<std::vector<Integer>>& primal_rows() const { return primal_; }

    /// Membership in coordinate space (proper coordinates when proper()).
    bool contains_coords(const std::vector<Scalar>& v) const;
    /// Membership of a multilinear polynomial (ambient monomial coordinates).
    bool contains(const MultilinearPoly& f) const;

    /// Canonical reduced echelon basis over the n! monomial coordinates.
    DenseRowSpace monomial_rref() const;

    bool same_space(const Subspace& o) const;

private:
    int degree_;
    bool proper_;
    int coord_width_;
    DenseRowSpace annihilator_;
    std::vector<std::vector<Integer>> primal_;
};

using SubspacePtr = std::shared_ptr<const Subspace>;

enum class CompareVerdict { Equal, LhsStrictlySmaller, RhsStrictlySmaller, Incomparable };

struct CompareResult {
    CompareVerdict verdict;
    /// On inequality: a polynomial in exactly one of the two spaces.
    std::string witness_poly;
    bool witness_in_lhs = false;
};

std::string verdict_name(CompareVerdict v);

struct EngineOptions {
    int threads = 1;
};

/// Computation front end with per-process caching of spaces and components.
class Engine {
public:
    explicit Engine(EngineOptions opts = {}) : opts_(opts) {}

    const EngineOptions& options() const { return opts_; }

    /// Kernel of the evaluation pairing on P_n (proper: on its proper part).
    SubspacePtr identity_space(const EvalTarget& target, int n, bool proper);

    /// Multilinear degree-n component of the T-ideal generated by gens
    /// (each homogeneous; multilinearized internally).
    SubspacePtr tideal_component(const std::vector<NCPoly>& gens, int n, bool proper);

    std::uint64_t gamma_dim(const EvalTarget& target, int n);
    std::uint64_t codim(const EvalTarget& target, int n);

    CompareResult compare(const Subspace& lhs, const Subspace& rhs) const;

    /// Oracle path: the same kernel computed by literally sweeping every
    /// basis tuple of the algebra. Exponential; degrees <= 4 in practice.
    SubspacePtr identity_space_sweep(const AlgebraPtr& alg, int n, bool proper);

private:
    SubspacePtr build_identity_space(const EvalTarget& target, int n, bool proper);
    SubspacePtr build_tideal(const std::vector<NCPoly>& gens, int n, bool proper);

    EngineOptions opts_;
    std::map<std::string, SubspacePtr> cache_;
};

}  // namespace piv
