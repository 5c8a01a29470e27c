#pragma once

#include "qtkern/exactalg/text.hpp"

namespace qtkern {

/// (u; base)_n = prod_{i=1}^{n} (1 - u base^{i-1}).
inline RatFunc pochhammer(const RatFunc& u, long n, const RatFunc& base) {
    if (n < 0) throw DomainError("negative Pochhammer length");
    RatFunc r(1);
    RatFunc f = u;
    for (long i = 0; i < n; ++i) {
        r *= RatFunc(1) - f;
        f *= base;
    }
    return r;
}

/// Value at var = point of a function regular there. The canonical form has
/// all common factors cancelled, so a vanishing denominator is a genuine pole.
inline RatFunc limit_at(const RatFunc& f, Symbol var, const RatFunc& point) {
    return substitute(f, {{var, point}});
}

}  // namespace qtkern
