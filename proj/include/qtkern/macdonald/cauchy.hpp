#pragma once

#include "qtkern/exactalg/qseries.hpp"
#include "qtkern/macdonald/tableau_formula.hpp"

namespace qtkern {

namespace detail {

inline long x_degree(const Monomial& m, std::string_view stem) {
    long d = 0;
    for (const auto& [v, e] : m.entries())
        if (v.name().rfind(stem, 0) == 0) d += e;
    return d;
}

inline XPoly graded_part(const XPoly& f, std::string_view stem, long degree) {
    XPoly out;
    for (const auto& [m, c] : f.terms())
        if (x_degree(m, stem) == degree) out.add_term(m, c);
    return out;
}

inline XPoly truncated_product(const XPoly& a, const XPoly& b, std::string_view stem, long max_degree) {
    XPoly out;
    for (const auto& [ma, ca] : a.terms()) {
        long da = x_degree(ma, stem);
        for (const auto& [mb, cb] : b.terms())
            if (da + x_degree(mb, stem) <= max_degree) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

}  // namespace detail

/// Degree-n part of prod_{i,j} (t x_i y_j;q)_inf / (x_i y_j;q)_inf, from the
/// q-binomial expansion f(u) = sum_k (t;q)_k/(q;q)_k u^k of each factor.
inline XPoly cauchy_kernel_component(int degree, int mx, int my) {
    const RatFunc q = q_pow(1), t = t_pow(1);
    std::vector<RatFunc> coef;
    for (int k = 0; k <= degree; ++k) coef.push_back(pochhammer(t, k, q) / pochhammer(q, k, q));
    XPoly total(RatFunc(1));
    for (int i = 1; i <= mx; ++i)
        for (int j = 1; j <= my; ++j) {
            XPoly factor;
            for (int k = 0; k <= degree; ++k)
                factor.add_term(Monomial({{sym("x", i), k}, {sym("y", j), k}}), coef[static_cast<std::size_t>(k)]);
            total = detail::truncated_product(total, factor, "x", degree);
        }
    return detail::graded_part(total, "x", degree);
}

/// sum over lambda ⊢ n of u_lambda(x) v_lambda(y) for a pair of bases.
inline XPoly dual_basis_sum(const MacdonaldContext& ctx, int degree, int mx, int my, Basis u, Basis v) {
    XPoly out;
    for (const auto& lambda : partitions_of(degree)) {
        XPoly a = restrict_to(ctx, SymFunc::basis_element(u, lambda), mx, "x");
        XPoly b = restrict_to(ctx, SymFunc::basis_element(v, lambda), my, "y");
        out += a * b;
    }
    return out;
}

struct CauchyResult {
    bool monomial_dual = false;    // matches sum m_lambda(x) g_lambda(y)
    bool macdonald_dual = false;   // matches sum P_lambda(x) Q_lambda(y)
    bool ok() const { return monomial_dual && macdonald_dual; }
};

inline CauchyResult cauchy_check(const MacdonaldContext& ctx, int degree, int mx, int my) {
    if (degree > 4) throw DomainError("cauchy_check supports degree <= 4");
    XPoly kernel = cauchy_kernel_component(degree, mx, my);
    CauchyResult r;
    r.monomial_dual = kernel == dual_basis_sum(ctx, degree, mx, my, Basis::m, Basis::g);
    r.macdonald_dual = kernel == dual_basis_sum(ctx, degree, mx, my, Basis::P, Basis::Q);
    return r;
}

}  // namespace qtkern
