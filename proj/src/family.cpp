#include "piv/family.hpp"

#include "piv/perm.hpp"

#include <stdexcept>

namespace piv {

namespace {

NCPoly first_factor(const std::vector<int>& entries) {
    return commutator_vars(entries);
}

std::vector<int> padded(std::vector<int> head, int pad_count) {
    for (int k = 0; k < pad_count; ++k) head.push_back(1);
    return head;
}

}  // namespace

void validate_family_spec(const FamilySpec& s) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("family kind " + std::to_string(s.kind) + ": " + why);
    };
    if (s.kind < 1 || s.kind > 5) fail("kind must be in 1..5");
    if (s.kind == 1) {
        if (s.i.has_value()) fail("parameter i is not accepted (table row 1)");
        if (s.degree < 2) fail("requires m >= 2 (table row 1)");
        return;
    }
    if (!s.i.has_value()) fail("parameter i is required");
    const int m = s.degree, i = *s.i;
    switch (s.kind) {
        case 2:
            if (m < 4) fail("requires m >= 4 (table row 2)");
            if (i < 2) fail("requires i >= 2 (table row 2)");
            if (i % 2 != 0) fail("requires i even, i mod 2 = 0 (table row 2)");
            if (m < i + 2) fail("requires m >= i + 2: the leading commutator needs length >= 2");
            break;
        case 3:
            if (m < 4) fail("requires m >= 4 (table row 3)");
            if (i < 3) fail("requires i >= 3 (table row 3)");
            if (i % 2 != 1) fail("requires i odd, i mod 2 = 1 (table row 3)");
            if (m < i + 1) fail("requires m >= i + 1: the leading commutator needs length >= 2");
            break;
        case 4:
            if (m < 5) fail("requires m >= 5 (table row 4)");
            if (i < 3) fail("requires i >= 3 (table row 4)");
            if (i % 2 != 1) fail("requires i odd, i mod 2 = 1 (table row 4)");
            if (m < i + 2) fail("requires m >= i + 2: negative padding");
            break;
        case 5:
            if (m < 4) fail("requires m >= 4 (table row 5)");
            if (i < 4) fail("requires i >= 4 (table row 5)");
            if (i % 2 != 0) fail("requires i even, i mod 2 = 0 (table row 5)");
            if (m < i) fail("requires m >= i: negative padding");
            break;
        default: break;
    }
}

NCPoly family(const FamilySpec& s) {
    validate_family_spec(s);
    const int m = s.degree;
    NCPoly result;

    if (s.kind == 1) {
        result = first_factor(padded({2}, m - 1));
    } else {
        const int i = *s.i;
        if (s.kind == 2) {
            // [x2,x1,...,x1][x1,x2][x3,x4]...[x_{i-1},x_i]
            NCPoly p = first_factor(padded({2}, m - i - 1));
            p = p * commutator_vars({1, 2});
            for (int a = 3; a + 1 <= i; a += 2) p = p * commutator_vars({a, a + 1});
            result = p;
        } else {
            for (const auto& sigma : all_permutations(i)) {
                std::vector<int> head;
                int pair_start = 0;
                switch (s.kind) {
                    case 3:
                        head = padded({sigma(1)}, m - i);
                        pair_start = 2;
                        break;
                    case 4:
                        head = padded({2, 1, sigma(1)}, m - i - 2);
                        pair_start = 2;
                        break;
                    case 5:
                        head = padded({sigma(1), sigma(2)}, m - i);
                        pair_start = 3;
                        break;
                    default: break;
                }
                NCPoly p = first_factor(head);
                for (int a = pair_start; a + 1 <= i; a += 2)
                    p = p * commutator_vars({sigma(a), sigma(a + 1)});
                result += Scalar(sigma.sign()) * p;
            }
        }
    }

    for (const auto& [w, c] : result.terms())
        if (static_cast<int>(w.size()) != m)
            throw std::logic_error("family: constructed polynomial has a monomial of degree != m");
    return result;
}

std::vector<FamilySpec> all_family_specs(int max_degree) {
    std::vector<FamilySpec> out;
    for (int kind = 1; kind <= 5; ++kind) {
        for (int m = 2; m <= max_degree; ++m) {
            if (kind == 1) {
                FamilySpec s{kind, m, std::nullopt};
                try {
                    validate_family_spec(s);
                    out.push_back(s);
                } catch (const std::invalid_argument&) {}
                continue;
            }
            for (int i = 2; i <= m; ++i) {
                FamilySpec s{kind, m, i};
                try {
                    validate_family_spec(s);
                    out.push_back(s);
                } catch (const std::invalid_argument&) {}
            }
        }
    }
    return out;
}

std::string family_name(const FamilySpec& s) {
    std::string name = "f" + std::to_string(s.kind) + "_m" + std::to_string(s.degree);
    if (s.i.has_value()) name += "_i" + std::to_string(*s.i);
    return name;
}

}  // namespace piv
