#pragma once

#include <optional>

#include "qtkern/exactalg/poly.hpp"

namespace qtkern {

/// Exact division in Q[vars] (Laurent exponents allowed). Returns nullopt
/// when b does not divide a.
inline std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.zero()) throw DomainError("division by zero polynomial");
    if (a.zero()) return MPoly{};
    if (b.size() == 1) {
        const auto& [mb, cb] = *b.terms().begin();
        Monomial inv = mb.inverse();
        Scalar ic = 1 / cb;
        MPoly::Terms t;
        for (const auto& [m, c] : a.terms()) t.emplace(m * inv, c * ic);
        return MPoly::from_terms(std::move(t));
    }
    // Laurent case: strip the monomial content of both sides; b' then has no
    // monomial factor, so divisibility reduces to polynomial division.
    Monomial ma = a.min_monomial();
    Monomial mb = b.min_monomial();
    MPoly ap = a.shifted(ma.inverse());
    MPoly bp = b.shifted(mb.inverse());
    MPoly q;
    MPoly r = std::move(ap);
    const Monomial lb_inv = bp.leading_monomial().inverse();
    const Scalar cb = bp.leading_coefficient();
    while (!r.zero()) {
        Monomial m = r.leading_monomial() * lb_inv;
        if (!m.all_nonnegative()) return std::nullopt;
        MPoly t(m, r.leading_coefficient() / cb);
        r -= t * bp;
        q += t;
    }
    return q.shifted(ma / mb);
}

/// b divides a with a quotient free of negative exponents.
inline bool divides_polynomially(const MPoly& a, const MPoly& b) {
    auto q = try_divide(a, b);
    if (!q) return false;
    for (const auto& [m, c] : q->terms())
        if (!m.all_nonnegative()) return false;
    return true;
}

inline MPoly divide_exact(const MPoly& a, const MPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw InternalConsistency("inexact polynomial division");
    return *q;
}

namespace detail {

inline MPoly make_monic(const MPoly& p) {
    if (p.zero()) return p;
    Scalar c = p.leading_coefficient();
    if (c == 1) return p;
    return p.scaled(1 / c);
}

inline MPoly gcd_impl(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of `a` viewed as a polynomial in s.
inline MPoly content_in(const MPoly& a, Symbol s) {
    MPoly g;
    for (const auto& [k, c] : a.coefficients_in(s)) {
        g = g.zero() ? make_monic(c) : gcd_impl(g, c);
        if (g.is_constant()) return MPoly(1);
    }
    return g;
}

/// Sparse pseudo-remainder of a by b with respect to s.
inline MPoly pseudo_remainder(MPoly a, const MPoly& b, Symbol s) {
    int db = b.degree(s);
    MPoly lcb = b.coefficient_in(s, db);
    while (!a.zero()) {
        int da = a.degree(s);
        if (da < db) break;
        MPoly lca = a.coefficient_in(s, da);
        a = lcb * a - (lca * b).shifted(Monomial(s, da - db));
    }
    return a;
}

inline MPoly gcd_impl(const MPoly& a, const MPoly& b) {
    if (a.zero()) return make_monic(b);
    if (b.zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a.size() == 1 || b.size() == 1) {
        // gcd with a monomial is a monomial
        Monomial m = min_exponents(a.min_monomial(), b.min_monomial());
        return MPoly(m, Scalar(1));
    }
    // choose main variable: smallest-degree variable common to both
    auto va = a.variables();
    auto vb = b.variables();
    std::optional<Symbol> main;
    int best = 0;
    for (Symbol v : va) {
        if (!vb.count(v)) return gcd_impl(content_in(a, v), b);
    }
    for (Symbol v : vb) {
        if (!va.count(v)) return gcd_impl(a, content_in(b, v));
    }
    for (Symbol v : va) {
        int d = std::max(a.degree(v), b.degree(v));
        if (!main || d < best) {
            main = v;
            best = d;
        }
    }
    Symbol s = *main;
    MPoly ca = content_in(a, s);
    MPoly cb = content_in(b, s);
    MPoly c = gcd_impl(ca, cb);
    MPoly pa = divide_exact(a, ca);
    MPoly pb = divide_exact(b, cb);
    if (pa.degree(s) < pb.degree(s)) std::swap(pa, pb);
    while (true) {
        MPoly r = pseudo_remainder(pa, pb, s);
        if (r.zero()) break;
        if (r.degree(s) == 0) {
            pb = MPoly(1);
            break;
        }
        pa = std::move(pb);
        pb = make_monic(divide_exact(r, content_in(r, s)));
    }
    if (pb.degree(s) > 0) pb = divide_exact(pb, content_in(pb, s));
    return make_monic(c * pb);
}

// Heuristic gcd: evaluate one variable at a large integer xi, recurse,
// and read the gcd back from the xi-adic digits of the result. A candidate
// is accepted only after trial division, and xi exceeds twice the smaller
// coefficient norm, so an accepted candidate is the true gcd.

inline MPoly integral_primitive(const MPoly& p) {
    Integer l = 1, g = 0;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (sgn(p.leading_coefficient()) < 0) g = -g;
    Scalar s(l, g);
    s.canonicalize();
    return s == 1 ? p : p.scaled(s);
}

inline Integer integer_content(const MPoly& p) {
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

inline Integer max_norm(const MPoly& p) {
    Integer r = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer a = abs(c.get_num());
        if (a > r) r = a;
    }
    return r;
}

inline MPoly evaluate_at(const MPoly& p, Symbol v, const Integer& xi) {
    std::map<int, Integer> powers;
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        auto it = powers.find(e);
        if (it == powers.end()) {
            Integer x;
            mpz_pow_ui(x.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
            it = powers.emplace(e, x).first;
        }
        r.add_term(m.without(v), c * Scalar(it->second));
    }
    return r;
}

inline MPoly interpolate_at(const MPoly& h, Symbol v, const Integer& xi) {
    MPoly r;
    Integer half = xi / 2;
    for (const auto& [m, c] : h.terms()) {
        Integer x = c.get_num();
        int e = 0;
        while (x != 0) {
            Integer d;
            mpz_fdiv_r(d.get_mpz_t(), x.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            if (d != 0) r.add_term(m * Monomial(v, e), Scalar(d));
            x = (x - d) / xi;
            ++e;
        }
    }
    return r;
}

inline std::optional<MPoly> heu_gcd(const MPoly& a, const MPoly& b, const std::vector<Symbol>& vars,
                                    std::size_t nvars);

/// gcd including the integer content; inputs have integer coefficients.
inline std::optional<MPoly> heu_gcd_full(const MPoly& a, const MPoly& b, const std::vector<Symbol>& vars,
                                         std::size_t nvars) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    Integer ca = integer_content(a), cb = integer_content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (nvars == 0 || (a.is_constant() || b.is_constant())) return MPoly(Scalar(c));
    auto g = heu_gcd(a.scaled(Scalar(1) / Scalar(ca)), b.scaled(Scalar(1) / Scalar(cb)), vars, nvars);
    if (!g) return std::nullopt;
    return g->scaled(Scalar(c));
}

/// gcd of integral primitive polynomials, made primitive.
inline std::optional<MPoly> heu_gcd(const MPoly& a, const MPoly& b, const std::vector<Symbol>& vars,
                                    std::size_t nvars) {
    Symbol v = vars[nvars - 1];
    if (!a.contains(v) && !b.contains(v)) return heu_gcd_full(a, b, vars, nvars - 1);
    Integer na = max_norm(a), nb = max_norm(b);
    Integer xi = 2 * (na < nb ? na : nb) + 29;
    const long deg = std::max<long>(a.degree(v), b.degree(v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        // images past this size cost more than the subresultant fallback
        if (static_cast<long>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * deg > (1L << 15)) return std::nullopt;
        MPoly ae = evaluate_at(a, v, xi), be = evaluate_at(b, v, xi);
        auto h = heu_gcd_full(ae, be, vars, nvars - 1);
        if (h) {
            MPoly g = interpolate_at(*h, v, xi);
            if (!g.zero()) {
                g = integral_primitive(g);
                if (divides_polynomially(a, g) && divides_polynomially(b, g)) return g;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace detail

/// Greatest common divisor of two polynomials with non-negative exponents,
/// normalized to leading coefficient 1.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.zero()) return detail::make_monic(b);
    if (b.zero()) return detail::make_monic(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a.size() == 1 || b.size() == 1) return detail::gcd_impl(a, b);
    auto va = a.variables();
    auto vb = b.variables();
    va.insert(vb.begin(), vb.end());
    std::vector<Symbol> vars(va.begin(), va.end());
    auto g = detail::heu_gcd(detail::integral_primitive(a), detail::integral_primitive(b), vars, vars.size());
    if (g) return detail::make_monic(*g);
    return detail::gcd_impl(a, b);
}

}  // namespace qtkern
