#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mba {

// Exact rational coefficients. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as we canonicalize after raw
// numerator/denominator construction, which frac() does.
using Scalar = mpq_class;

inline Scalar frac(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

// 1/2^k, the coefficient family from the multiplication table.
inline Scalar half_pow(unsigned k) {
    Scalar s(1);
    mpq_class two(2);
    for (unsigned i = 0; i < k; ++i) s /= two;
    return s;
}

inline std::string scalar_str(const Scalar& s) {
    return s.get_str();
}

inline Scalar parse_scalar(const std::string& text) {
    Scalar s;
    if (s.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational: " + text);
    s.canonicalize();
    return s;
}

}  // namespace mba
