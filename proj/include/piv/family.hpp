#pragma once

#include "piv/ncpoly.hpp"

#include <optional>
#include <vector>

namespace piv {

/// One of the five commutator-product families. kind 1 takes no i parameter.
struct FamilySpec {
    int kind = 1;  // 1..5
    int degree = 2;  // m, the total degree
    std::optional<int> i;  // chain parameter, absent for kind 1
};

/// Validates the parameter table; throws std::invalid_argument naming the
/// violated row otherwise.
void validate_family_spec(const FamilySpec& spec);

/// Constructs the family member. Every monomial has total degree m.
NCPoly family(const FamilySpec& spec);

/// All valid specs with degree <= max_degree, deterministic order.
std::vector<FamilySpec> all_family_specs(int max_degree);

std::string family_name(const FamilySpec& spec);

}  // namespace piv
