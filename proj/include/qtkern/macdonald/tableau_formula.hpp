#pragma once

#include <vector>

#include "qtkern/macdonald/context.hpp"
#include "qtkern/partitions/tableau.hpp"

namespace qtkern {

/// Polynomial in x_1..x_m with coefficients in F.
using XPoly = Poly<RatFunc>;

inline Symbol x_symbol(int i) { return sym("x", i); }

namespace detail {

/// f(q^a t^b) / f(q^c t^b) for f(u) = (tu;q)_inf/(qu;q)_inf, as the finite
/// product left after the infinite tails cancel.
inline RatFunc f_ratio(int a, int c, int b) {
    RatFunc r(1);
    if (a <= c) {
        for (int k = a; k < c; ++k) r *= (RatFunc(1) - qt_pow(k, b + 1)) / (RatFunc(1) - qt_pow(k + 1, b));
    } else {
        for (int k = c; k < a; ++k) r *= (RatFunc(1) - qt_pow(k + 1, b)) / (RatFunc(1) - qt_pow(k, b + 1));
    }
    return r;
}

inline int at(const std::vector<int>& v, int i) {
    return i >= 1 && i <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i - 1)] : 0;
}

inline int effective_length(const std::vector<int>& v) {
    int l = static_cast<int>(v.size());
    while (l > 0 && v[static_cast<std::size_t>(l - 1)] == 0) --l;
    return l;
}

}  // namespace detail

/// psi_{lambda/mu}(q,t) for integer sequences mu ⊆ lambda (not necessarily
/// partitions). Each of the two f-quotients per (i,j) has matching
/// t-exponent, so it telescopes to a finite product.
///
/// The indices run up to l(lambda) rather than l(mu). The extra factors are
/// 1 whenever lambda/mu is a horizontal strip, and they supply the zero for
/// steps that are not (e.g. lambda/mu = (1,1)/0).
inline RatFunc psi_skew(const std::vector<int>& lambda, const std::vector<int>& mu) {
    for (std::size_t i = 0; i < std::max(lambda.size(), mu.size()); ++i)
        if (detail::at(mu, static_cast<int>(i) + 1) > detail::at(lambda, static_cast<int>(i) + 1))
            throw DomainError("psi_skew needs mu inside lambda");
    using detail::at;
    RatFunc r(1);
    const int l = std::max(detail::effective_length(lambda), detail::effective_length(mu));
    for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) {
            const int b = j - i;
            // f(q^{mu_i-mu_j} t^b) / f(q^{lambda_i-mu_j} t^b)
            r *= detail::f_ratio(at(mu, i) - at(mu, j), at(lambda, i) - at(mu, j), b);
            if (r.zero()) return r;
            // f(q^{lambda_i-lambda_{j+1}} t^b) / f(q^{mu_i-lambda_{j+1}} t^b)
            r *= detail::f_ratio(at(lambda, i) - at(lambda, j + 1), at(mu, i) - at(lambda, j + 1), b);
            if (r.zero()) return r;
        }
    return r;
}

inline RatFunc psi_skew(const Partition& lambda, const Partition& mu) {
    return psi_skew(lambda.parts(), mu.parts());
}

/// psi_T = prod_k psi_{lambda^(k)/lambda^(k-1)} along the chain of T.
inline RatFunc psi_filling(const RowFilling& T) {
    auto chain = filling_to_chain(T);
    RatFunc r(1);
    for (std::size_t k = 1; k < chain.shapes.size(); ++k) {
        r *= psi_skew(chain.shapes[k], chain.shapes[k - 1]);
        if (r.zero()) break;
    }
    return r;
}

inline Monomial x_power(const RowFilling& T) {
    std::vector<Monomial::Entry> e;
    for (int letter : T.word) e.emplace_back(x_symbol(letter), 1);
    return Monomial(std::move(e));
}

/// sum over semistandard T of x^T psi_T.
inline XPoly tableau_expand(const Partition& lambda, int m) {
    XPoly out;
    for_each_filling(lambda, m, FillingFamily::SSTb,
                     [&](const RowFilling& T) { out.add_term(x_power(T), psi_filling(T)); });
    return out;
}

/// m_mu(x_1..x_m): sum over distinct rearrangements of mu padded with zeros.
inline XPoly monomial_symmetric(const Partition& mu, int m) {
    XPoly out;
    if (mu.length() > m) return out;
    std::vector<int> v(mu.parts());
    v.resize(static_cast<std::size_t>(m), 0);
    std::sort(v.begin(), v.end());
    do {
        std::vector<Monomial::Entry> e;
        for (int i = 0; i < m; ++i)
            if (v[static_cast<std::size_t>(i)]) e.emplace_back(x_symbol(i + 1), v[static_cast<std::size_t>(i)]);
        out.add_term(Monomial(std::move(e)), RatFunc(1));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// A symmetric function restricted to m variables (renaming x to `stem`).
inline XPoly restrict_to(const MacdonaldContext& ctx, const SymFunc& f, int m, std::string_view stem = "x") {
    SymFunc fm = ctx.convert(f, Basis::m);
    XPoly out;
    for (const auto& [mu, c] : fm.coeffs) {
        XPoly term = monomial_symmetric(mu, m);
        if (stem != "x") {
            XPoly renamed;
            for (const auto& [mono, v] : term.terms()) {
                std::vector<Monomial::Entry> e;
                for (const auto& [s, k] : mono.entries()) e.emplace_back(sym(stem, std::stoi(s.name().substr(1))), k);
                renamed.add_term(Monomial(std::move(e)), v);
            }
            term = std::move(renamed);
        }
        out += term.scaled(c);
    }
    return out;
}

/// A counterexample to the vanishing of psi_T off the semistandard set.
struct PsiWitness {
    RowFilling filling;
    RatFunc value;
};

/// psi_T = 0 for every row-nondecreasing T that is not semistandard.
inline std::vector<PsiWitness> psi_vanishing_check(const Partition& lambda, int m) {
    std::vector<PsiWitness> bad;
    for_each_filling(lambda, m, FillingFamily::Tbr, [&](const RowFilling& T) {
        if (T.columns_strictly_increasing()) return;
        RatFunc v = psi_filling(T);
        if (!v.zero()) bad.push_back({T, v});
    });
    return bad;
}

}  // namespace qtkern
