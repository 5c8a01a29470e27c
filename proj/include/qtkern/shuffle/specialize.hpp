#pragma once

#include <optional>

#include "qtkern/macdonald/tableau_formula.hpp"
#include "qtkern/report.hpp"
#include "qtkern/shuffle/kernel.hpp"

namespace qtkern {

inline Symbol zeta_symbol() { return sym("zeta"); }

/// phi^{(inner)}_lambda, optionally followed by y_k = zeta^{k-1} y.
struct SpecializationPlan {
    Partition lambda;
    RatFunc inner;
    std::optional<RatFunc> zeta;
};

/// phi~^{(zeta)}_lambda with symbolic zeta.
inline SpecializationPlan tilde_plan(const Partition& lambda, const Parameters& par) {
    return {lambda, par.q1(), RatFunc::monomial(Monomial(zeta_symbol(), 1))};
}

/// Points (y_k, p y_k, ..., p^{lambda_k-1} y_k) row by row. With an outer
/// zeta, `y` has one entry and y_k = zeta^{k-1} y.
inline Points specialization_points(const SpecializationPlan& plan, const Points& y) {
    const int l = plan.lambda.length();
    Points ys;
    if (plan.zeta) {
        if (y.size() != 1) throw DomainError("phi~ takes a single y");
        RatFunc cur = y[0];
        for (int k = 0; k < l; ++k) {
            ys.push_back(cur);
            cur *= *plan.zeta;
        }
    } else {
        if (static_cast<int>(y.size()) != l) throw DomainError("specialization needs one y per row");
        ys = y;
    }
    Points z;
    for (int k = 1; k <= l; ++k) {
        RatFunc cur = ys[static_cast<std::size_t>(k - 1)];
        for (int j = 0; j < plan.lambda[k]; ++j) {
            z.push_back(cur);
            cur *= plan.inner;
        }
    }
    return z;
}

inline RatFunc specialize(const Evaluator& f, const SpecializationPlan& plan, const Points& y) {
    return f(specialization_points(plan, y));
}

/// gamma_T(z) = prod_{a<b} gamma_{i_a,i_b}(z_a,z_b) for a reading word T.
inline RatFunc gamma_word(const std::vector<int>& word, const Points& z, const Parameters& par) {
    RatFunc r(1);
    for (std::size_t a = 0; a < word.size() && !r.zero(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b) r *= gamma_pair(word[a], word[b], z[a], z[b], par);
    return r;
}

namespace detail {

inline void record_sample(CheckRecord& r, const Parameters& par, const RatFunc& y) {
    r.witness["q"] = to_string(par.q);
    r.witness["t"] = to_string(par.t);
    r.witness["y"] = to_string(y);
}

/// lim_{zeta->t} of num/den, both already specialized with symbolic zeta.
inline std::optional<RatFunc> zeta_limit(const RatFunc& num, const RatFunc& den, const Parameters& par,
                                         std::string& why) {
    if (den.zero()) {
        why = "denominator vanishes identically after specialization";
        return std::nullopt;
    }
    try {
        return limit_at(num / den, zeta_symbol(), par.t);
    } catch (const PoleError& e) {
        why = std::string("not regular at zeta=t: ") + e.what();
        return std::nullopt;
    }
}

}  // namespace detail

/// lim_{zeta->t} phi~_lambda(F_mu/F_lambda) = delta_{lambda,mu}.
inline CheckRecord verify_tableau_theorem(const MacdonaldContext& ctx, const Partition& lambda, const Partition& mu,
                                          std::uint64_t seed) {
    if (lambda.size() != mu.size()) throw DomainError("verify_tableau_theorem needs |lambda| = |mu|");
    CheckRecord r{"tableau_theorem", lambda.to_string(), mu.to_string(), seed};
    Sampler s(seed);
    Parameters par = s.parameters();
    RatFunc y(s.rational());
    detail::record_sample(r, par, y);
    PairTable tab(specialization_points(tilde_plan(lambda, par), {y}), par);
    RatFunc fl = F_lambda(ctx, lambda, FRoute::via_g).evaluate(tab);
    RatFunc fm = lambda == mu ? fl : F_lambda(ctx, mu, FRoute::via_g).evaluate(tab);
    auto v = detail::zeta_limit(fm, fl, par, r.note);
    RatFunc expected(lambda == mu ? 1 : 0);
    r.verdict = v && *v == expected;
    r.value = v ? to_string(*v) : "undefined";
    return r;
}

/// The b and psi limits for one lambda and m >= l(lambda):
/// the b_lambda normalization and lim gamma_T/gamma_D = psi_T for every
/// row-nondecreasing T.
inline std::vector<CheckRecord> verify_b_psi(const MacdonaldContext& ctx, const Partition& lambda, int m,
                                             std::uint64_t seed) {
    if (m < lambda.length()) throw DomainError("verify_b_psi needs m >= l(lambda)");
    std::vector<CheckRecord> out;
    Sampler s(seed);
    Parameters par = s.parameters();
    RatFunc y(s.rational());
    const int n = lambda.size();
    Points z = specialization_points(tilde_plan(lambda, par), {y});
    PairTable tab(z, par);
    RowFilling D = diagonal_filling(lambda, m);
    RatFunc gD = gamma_word(D.word, z, par);

    CheckRecord b{"b_normalization", lambda.to_string(), "", seed};
    detail::record_sample(b, par, y);
    b.witness["m"] = std::to_string(m);
    RatFunc fl = F_lambda(ctx, lambda, FRoute::via_g).evaluate(tab);
    auto lim = detail::zeta_limit(gD, fl, par, b.note);
    if (lim) {
        RatFunc lhs = detail::kernel_prefactor(n, par) * *lim;
        RatFunc expected = par.at(ctx.b(lambda));
        b.verdict = lhs == expected;
        b.value = to_string(lhs);
        if (!b.verdict) b.note = "expected " + to_string(expected);
    } else {
        b.value = "undefined";
    }
    out.push_back(b);

    for_each_filling(lambda, m, FillingFamily::Tbr, [&](const RowFilling& T) {
        CheckRecord r{"psi_limit", lambda.to_string(), "", seed};
        detail::record_sample(r, par, y);
        r.witness["T"] = T.theta_string();
        auto v = detail::zeta_limit(gamma_word(T.word, z, par), gD, par, r.note);
        RatFunc expected = par.at(psi_filling(T));
        r.verdict = v && *v == expected;
        r.value = v ? to_string(*v) : "undefined";
        if (v && !r.verdict) r.note = "expected " + to_string(expected);
        out.push_back(r);
    });
    return out;
}

/// Degenerate-CP1 condition for F_lambda: scaling the last k points by xi,
/// the limits xi -> 0 and xi -> infinity exist and agree.
inline CheckRecord boundary_check(const MacdonaldContext& ctx, const Partition& lambda, int k, std::uint64_t seed) {
    const int n = lambda.size();
    if (k < 0 || k > n) throw DomainError("boundary_check needs 0 <= k <= |lambda|");
    CheckRecord r{"boundary_limits", lambda.to_string(), "", seed};
    r.witness["k"] = std::to_string(k);
    Sampler s(seed);
    Parameters par = s.parameters();
    Points z = s.points(static_cast<std::size_t>(n));
    r.witness["q"] = to_string(par.q);
    r.witness["t"] = to_string(par.t);
    const Symbol xi = sym("xi");
    const RatFunc X = RatFunc::monomial(Monomial(xi, 1));
    for (int i = n - k; i < n; ++i) z[static_cast<std::size_t>(i)] *= X;
    RatFunc f = F_lambda(ctx, lambda, FRoute::via_g).evaluate(z, par);
    try {
        RatFunc at0 = limit_at(f, xi, RatFunc(0));
        RatFunc atinf = limit_at(substitute(f, {{xi, X.inverse()}}), xi, RatFunc(0));
        r.verdict = at0 == atinf;
        r.value = to_string(at0);
        if (!r.verdict) r.note = "limit at infinity " + to_string(atinf);
    } catch (const PoleError& e) {
        r.value = "undefined";
        r.note = e.what();
    }
    return r;
}

}  // namespace qtkern
