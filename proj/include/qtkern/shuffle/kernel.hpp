#pragma once

#include "qtkern/shuffle/algebra.hpp"

namespace qtkern {

enum class KernelForm { gamma_sum, eps_sum, QF_sum };

/// m_mu(x_1..x_m) at given values.
inline RatFunc monomial_eval(const Partition& mu, const Points& x) {
    const std::size_t m = x.size();
    if (static_cast<std::size_t>(mu.length()) > m) return RatFunc();
    std::vector<int> v(mu.parts());
    v.resize(m, 0);
    std::sort(v.begin(), v.end());
    RatFunc sum;
    do {
        RatFunc term(1);
        for (std::size_t i = 0; i < m; ++i)
            if (v[i]) term *= x[i].pow(v[i]);
        sum += term;
    } while (std::next_permutation(v.begin(), v.end()));
    return sum;
}

/// A symmetric function at given values of x_1..x_m.
inline RatFunc symfunc_eval(const MacdonaldContext& ctx, const SymFunc& f, const Points& x, const Parameters& par) {
    RatFunc sum;
    for (const auto& [mu, c] : ctx.convert(f, Basis::m).coeffs) sum += par.at(c) * monomial_eval(mu, x);
    return sum;
}

namespace detail {

inline RatFunc kernel_prefactor(int n, const Parameters& par) {
    RatFunc r = RatFunc(n % 2 ? -1 : 1) / (RatFunc(1) - par.q).pow(n);
    return r / RatFunc(Scalar(factorial(n)));
}

inline RatFunc kernel_gamma_sum(int n, const Points& x, const Points& z, const Parameters& par) {
    const std::size_t m = x.size();
    // pair values for the three cases i=j, i<j, i>j
    std::vector<std::vector<std::array<RatFunc, 3>>> g(static_cast<std::size_t>(n),
                                                       std::vector<std::array<RatFunc, 3>>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const RatFunc &za = z[static_cast<std::size_t>(a)], &zb = z[static_cast<std::size_t>(b)];
            g[a][b] = {gamma_pair(1, 1, za, zb, par), gamma_pair(1, 2, za, zb, par), gamma_pair(2, 1, za, zb, par)};
        }
    RatFunc sum;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        RatFunc term(1);
        for (std::size_t a = 0; a < idx.size(); ++a) term *= x[idx[a]];
        for (int a = 0; a < n && !term.zero(); ++a)
            for (int b = a + 1; b < n; ++b) {
                std::size_t ia = idx[static_cast<std::size_t>(a)], ib = idx[static_cast<std::size_t>(b)];
                term *= g[a][b][ia == ib ? 0 : ia < ib ? 1 : 2];
            }
        sum += term;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == m) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return kernel_prefactor(n, par) * sum;
}

inline RatFunc kernel_eps_sum(int n, const Points& x, const Points& z, const Parameters& par) {
    PairTable tab(z, par);
    RatFunc sum;
    for (const auto& lambda : partitions_of(n)) {
        RatFunc mx = monomial_eval(lambda, x);
        if (mx.zero()) continue;
        RatFunc mult = RatFunc(Scalar(factorial(n))) / RatFunc(factorial_product(lambda));
        sum += mx * mult * epsilon_product(lambda.parts(), tab, false);
    }
    return kernel_prefactor(n, par) * sum;
}

inline RatFunc kernel_QF_sum(const MacdonaldContext& ctx, int n, const Points& x, const Points& z,
                             const Parameters& par) {
    PairTable tab(z, par);
    RatFunc sum;
    for (const auto& lambda : partitions_of(n)) {
        RatFunc qx = symfunc_eval(ctx, ctx.Q(lambda), x, par);
        if (qx.zero()) continue;
        sum += qx * F_lambda(ctx, lambda, FRoute::via_g).evaluate(tab);
    }
    return sum;
}

}  // namespace detail

/// K_n(x,z;q,t) at given x (m values) and z (n values).
inline RatFunc kernel_K(const MacdonaldContext& ctx, int n, KernelForm form, const Points& x, const Points& z,
                        const Parameters& par = {}) {
    if (static_cast<int>(z.size()) != n) throw DomainError("kernel_K: expected " + std::to_string(n) + " z values");
    if (n == 0) return RatFunc(1);
    switch (form) {
        case KernelForm::gamma_sum: return detail::kernel_gamma_sum(n, x, z, par);
        case KernelForm::eps_sum: return detail::kernel_eps_sum(n, x, z, par);
        case KernelForm::QF_sum: return detail::kernel_QF_sum(ctx, n, x, z, par);
    }
    return RatFunc();
}

}  // namespace qtkern
