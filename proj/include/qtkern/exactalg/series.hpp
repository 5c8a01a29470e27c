#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qtkern/exactalg/text.hpp"

namespace qtkern {

enum class Center { zero, infinity };

/// Truncated Laurent expansion of a rational function in one variable.
///
/// Coefficients are stored for the contiguous exponent window
/// [lowest, lowest + coeffs.size() - 1] in ascending order. At center zero
/// the window ends at the truncation order; at infinity the expansion runs
/// downward and the window starts at it.
struct LaurentSeries {
    Symbol variable;
    Center center = Center::zero;
    int lowest = 0;
    std::vector<RatFunc> coeffs;
    int truncation_order = 0;

    int highest() const { return lowest + static_cast<int>(coeffs.size()) - 1; }

    /// Coefficient of variable^k; zero outside the support, error beyond the
    /// truncation.
    RatFunc coefficient(int k) const {
        if (center == Center::zero ? k > truncation_order : k < truncation_order)
            throw EmptyWindow("exponent " + std::to_string(k) + " beyond truncation");
        if (k < lowest || k > highest()) return RatFunc();
        return coeffs[static_cast<std::size_t>(k - lowest)];
    }
};

namespace detail {

/// num and den of f as polynomials in x with coefficients free of x.
inline std::pair<std::map<int, MPoly>, std::map<int, MPoly>> split_in(const RatFunc& f, Symbol x) {
    return {f.num().coefficients_in(x), f.den().coefficients_in(x)};
}

/// Power-series quotient of two x-polynomials given as ascending maps.
inline std::vector<RatFunc> series_quotient(const std::map<int, MPoly>& n, const std::map<int, MPoly>& d,
                                            int count) {
    const int n0 = n.begin()->first;
    const int d0 = d.begin()->first;
    RatFunc lead_inv = RatFunc(d.begin()->second).inverse();
    std::vector<RatFunc> c;
    c.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        auto it = n.find(n0 + k);
        RatFunc acc = it == n.end() ? RatFunc() : RatFunc(it->second);
        for (auto jt = std::next(d.begin()); jt != d.end(); ++jt) {
            int j = jt->first - d0;
            if (j > k) break;
            if (!c[static_cast<std::size_t>(k - j)].zero()) acc -= RatFunc(jt->second) * c[static_cast<std::size_t>(k - j)];
        }
        c.push_back(acc * lead_inv);
    }
    return c;
}

inline std::map<int, MPoly> reversed(const std::map<int, MPoly>& p) {
    std::map<int, MPoly> r;
    for (const auto& [k, c] : p) r.emplace(-k, c);
    return r;
}

}  // namespace detail

/// Laurent expansion of f in x around 0 (keeping exponents up to `order`) or
/// around infinity (keeping exponents down to `order`).
inline LaurentSeries series_expand(const RatFunc& f, Symbol x, Center center, int order) {
    if (x.scale() != 1) throw DomainError("series variable must be unscaled: " + x.name());
    LaurentSeries s;
    s.variable = x;
    s.center = center;
    s.truncation_order = order;
    if (f.zero()) {
        s.lowest = order;
        return s;
    }
    auto [n, d] = detail::split_in(f, x);
    if (center == Center::zero) {
        int lead = n.begin()->first - d.begin()->first;
        if (order < lead) throw EmptyWindow("order below lowest exponent " + std::to_string(lead));
        s.lowest = lead;
        s.coeffs = detail::series_quotient(n, d, order - lead + 1);
    } else {
        // expand in u = 1/x at u = 0, then read back
        auto nr = detail::reversed(n);
        auto dr = detail::reversed(d);
        int lead_u = nr.begin()->first - dr.begin()->first;
        int top = -lead_u;
        if (order > top) throw EmptyWindow("order above highest exponent " + std::to_string(top));
        auto c = detail::series_quotient(nr, dr, top - order + 1);
        std::reverse(c.begin(), c.end());
        s.lowest = order;
        s.coeffs = std::move(c);
    }
    return s;
}

/// Sum of c * delta(x/a): the difference of the expansions at 0 and at
/// infinity of a function with only simple poles.
struct DeltaDecomposition {
    std::vector<std::pair<RatFunc, RatFunc>> terms;  // (pole a, coefficient c)

    /// Coefficient of x^n in sum c * delta(x/a) = sum c * a^{-n} x^n.
    RatFunc coefficient(int n) const {
        RatFunc s;
        for (const auto& [a, c] : terms) s += c * a.pow(-n);
        return s;
    }
};

namespace detail {

/// Candidate roots of the x-polynomial d: +-(ratio of coefficient
/// monomials of adjacent degrees), with exact coefficient ratios.
inline std::vector<RatFunc> root_candidates(const std::map<int, MPoly>& d) {
    std::vector<RatFunc> out;
    auto push = [&](RatFunc a) {
        if (a.zero()) return;
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    };
    for (auto i = d.begin(); i != d.end(); ++i) {
        for (auto j = std::next(i); j != d.end(); ++j) {
            int gap = j->first - i->first;
            for (const auto& [mi, ci] : i->second.terms())
                for (const auto& [mj, cj] : j->second.terms()) {
                    Monomial r = mi / mj;
                    bool ok = true;
                    std::vector<Monomial::Entry> root;
                    for (const auto& [v, e] : r.entries()) {
                        if (e % gap) ok = false;
                        else root.emplace_back(v, e / gap);
                    }
                    if (!ok) continue;
                    Monomial m(std::move(root));
                    push(RatFunc::monomial(m));
                    push(RatFunc::monomial(m, -1));
                    if (gap == 1) push(RatFunc::monomial(m, -ci / cj));
                }
        }
    }
    return out;
}

inline MPoly linear_factor(Symbol x, const RatFunc& a) {
    // a = A/B, factor B*x - A
    return a.den() * MPoly(x) - a.num();
}

}  // namespace detail

/// Decompose iota_0(f) - iota_inf(f) in x as a finite sum of formal delta
/// functions; verified coefficientwise on the window |n| <= max_order.
inline DeltaDecomposition delta_decompose(const RatFunc& f, Symbol x, int max_order) {
    DeltaDecomposition out;
    if (f.zero() || !f.den().contains(x)) return out;
    MPoly rest = f.den();
    // strip pure powers of x (poles at 0 are part of the Laurent polynomial)
    rest = rest.shifted(Monomial(x, -rest.min_degree(x)));
    auto candidates = detail::root_candidates(rest.coefficients_in(x));
    for (const RatFunc& a : candidates) {
        if (!rest.contains(x)) break;
        MPoly lin = detail::linear_factor(x, a);
        auto q = try_divide(rest, lin);
        if (!q) continue;
        if (try_divide(*q, lin)) throw NonSimplePole("double pole at " + to_string(a));
        rest = std::move(*q);
        RatFunc g = f * (RatFunc(1) - RatFunc(x) / a);
        RatFunc c = substitute(g, {{x, a}});
        out.terms.emplace_back(a, c);
    }
    if (rest.contains(x)) throw DomainError("pole not at a monomial location: " + to_string(rest));
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& l, const auto& r) { return to_string(l.first) < to_string(r.first); });
    auto s0 = series_expand(f, x, Center::zero, max_order);
    auto si = series_expand(f, x, Center::infinity, -max_order);
    for (int n = -max_order; n <= max_order; ++n) {
        RatFunc lhs = s0.coefficient(n) - si.coefficient(n);
        if (lhs != out.coefficient(n))
            throw InternalConsistency("delta decomposition mismatch at x^" + std::to_string(n));
    }
    return out;
}

}  // namespace qtkern
