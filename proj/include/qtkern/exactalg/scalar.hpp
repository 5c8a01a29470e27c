#pragma once

#include <gmpxx.h>

#include <string>

namespace qtkern {

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator (GMP's canonical form).
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }
inline bool is_one(const Scalar& s) { return s == 1; }

inline Scalar pow(const Scalar& base, long e) {
    Scalar result = 1;
    Scalar b = base;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (k) {
        if (k & 1u) result *= b;
        b *= b;
        k >>= 1u;
    }
    if (invert) result = 1 / result;
    return result;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace qtkern
