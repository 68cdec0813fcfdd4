#pragma once

#include <gmpxx.h>

#include <string>

namespace piv {

/// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
/// denominator), which is what every exactness argument below relies on.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar scalar(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

/// "3", "-3", "3/2" — matches the polynomial text grammar's coeff rule.
inline std::string scalar_str(const Scalar& q) {
    return q.get_str();
}

}  // namespace piv
