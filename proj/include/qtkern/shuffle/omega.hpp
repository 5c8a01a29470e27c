#pragma once

#include <vector>

#include "qtkern/exactalg.hpp"
#include "qtkern/macdonald/symfunc.hpp"

namespace qtkern {

using Points = std::vector<RatFunc>;

/// Values of (q,t) used when evaluating shuffle elements. Symbolic by
/// default; numeric when the caller samples random rationals.
struct Parameters {
    RatFunc q = q_pow(1);
    RatFunc t = t_pow(1);
    bool symbolic = true;

    static Parameters numeric(const Scalar& qv, const Scalar& tv) { return {RatFunc(qv), RatFunc(tv), false}; }

    RatFunc q1() const { return q.inverse(); }
    RatFunc q2() const { return t; }
    RatFunc q3() const { return q / t; }

    /// A coefficient in F = Q(q,t) at these parameter values.
    RatFunc at(const RatFunc& c) const {
        if (symbolic) return c;
        return substitute(c, {{sym("q"), q}, {sym("t"), t}});
    }
};

namespace detail {

inline RatFunc difference_or_pole(const RatFunc& x, const RatFunc& y, const char* what) {
    RatFunc d = x - y;
    if (d.zero()) throw PoleError(std::string(what) + " at coincident points " + to_string(x));
    return d;
}

}  // namespace detail

/// (x-q1 y)(x-q2 y)(x-q3 y)/(x-y)^3.
inline RatFunc omega_eval(const RatFunc& x, const RatFunc& y, const RatFunc& q1, const RatFunc& q2,
                          const RatFunc& q3) {
    RatFunc d = detail::difference_or_pole(x, y, "omega");
    return (x - q1 * y) * (x - q2 * y) * (x - q3 * y) / (d * d * d);
}

inline RatFunc omega_eval(const RatFunc& x, const RatFunc& y, const Parameters& par) {
    return omega_eval(x, y, par.q1(), par.q2(), par.q3());
}

/// One pair factor of epsilon_n; symmetric in (z,w).
inline RatFunc epsilon_pair(const RatFunc& z, const RatFunc& w, const RatFunc& p) {
    RatFunc d = detail::difference_or_pole(z, w, "epsilon");
    return (z - p * w) * (z - p.inverse() * w) / (d * d);
}

/// prod_{i<j} (z_i - p z_j)(z_i - p^{-1} z_j)/(z_i - z_j)^2.
inline RatFunc epsilon_eval(int n, const Points& z, const RatFunc& p) {
    if (static_cast<int>(z.size()) != n) throw DomainError("epsilon_eval: expected " + std::to_string(n) + " points");
    RatFunc r(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r *= epsilon_pair(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)], p);
    return r;
}

/// gamma_{i,j}(z,w;q,t).
inline RatFunc gamma_pair(int i, int j, const RatFunc& z, const RatFunc& w, const Parameters& par) {
    if (i == j) return epsilon_pair(z, w, par.t);
    if (i < j) return omega_eval(z, w, par);
    return omega_eval(w, z, par);
}

/// Pairwise omega and epsilon values on a fixed point set, computed once.
class PairTable {
public:
    PairTable(const Points& z, const Parameters& par) : z_(z), par_(par), n_(z.size()) {}

    std::size_t size() const noexcept { return n_; }

    const RatFunc& omega(std::size_t a, std::size_t b) {
        auto& slot = omega_[{a, b}];
        if (!slot) slot = omega_eval(z_[a], z_[b], par_);
        return *slot;
    }

    /// Pair factor of epsilon with parameter q (use_q) or t.
    const RatFunc& epsilon(std::size_t a, std::size_t b, bool use_q) {
        if (a > b) std::swap(a, b);
        auto& slot = (use_q ? eps_q_ : eps_t_)[{a, b}];
        if (!slot) slot = epsilon_pair(z_[a], z_[b], use_q ? par_.q : par_.t);
        return *slot;
    }

    const Parameters& parameters() const noexcept { return par_; }
    const Points& points() const noexcept { return z_; }

private:
    using Key = std::pair<std::size_t, std::size_t>;
    Points z_;
    Parameters par_;
    std::size_t n_;
    std::map<Key, std::optional<RatFunc>> omega_, eps_q_, eps_t_;
};

}  // namespace qtkern
