#pragma once

#include <map>
#include <string>

#include "qtkern/exactalg/gcd.hpp"

namespace qtkern {

/// Order in which terms are printed: ascending total degree, then descending
/// lexicographic. The first term in this order is the "trailing" term.
inline bool print_before(const Monomial& a, const Monomial& b) {
    long da = a.weighted_degree(), db = b.weighted_degree();
    if (da != db) return da < db;
    return lex_compare(a, b) > 0;
}

template <typename C>
const Monomial& trailing_monomial(const Poly<C>& p) {
    auto it = p.terms().begin();
    const Monomial* best = &it->first;
    for (++it; it != p.terms().end(); ++it)
        if (print_before(it->first, *best)) best = &it->first;
    return *best;
}

/// Exact rational function num/den over Q.
///
/// Canonical form: num and den are coprime polynomials (non-negative
/// exponents) with jointly primitive integer coefficients, and the trailing
/// term of den is positive. Equal functions have identical representations.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(Scalar(c)), den_(1) {}              // NOLINT
    RatFunc(Scalar c) : den_(1) {  // NOLINT
        c.canonicalize();
        num_ = MPoly(c);
        if (!num_.zero()) rescale();
    }
    RatFunc(const MPoly& p) : num_(p), den_(1) { normalize(); }  // NOLINT
    explicit RatFunc(Symbol s, int e = 1) : num_(s, e), den_(1) { normalize(); }
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc monomial(const Monomial& m, const Scalar& c = 1) { return RatFunc(MPoly(m, c)); }

    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }

    bool zero() const noexcept { return num_.zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    Scalar constant_value() const {
        if (!is_constant()) throw DomainError("rational function is not constant");
        return num_.constant_term() / den_.constant_term();
    }

    std::set<Symbol> variables() const {
        auto v = num_.variables();
        auto w = den_.variables();
        v.insert(w.begin(), w.end());
        return v;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, Reduce::partial, &a.den_);
        if (a.den_.is_constant() && b.den_.is_constant())
            return RatFunc(a.num_.scaled(b.den_.constant_term()) + b.num_.scaled(a.den_.constant_term()),
                           a.den_.scaled(b.den_.constant_term()), Reduce::scale_only, nullptr);
        MPoly g = gcd(a.den_, b.den_);
        MPoly ad = divide_exact(a.den_, g);
        MPoly bd = divide_exact(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd, Reduce::partial, &g);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.zero() || b.zero()) return RatFunc();
        if (a.is_constant()) return b.scaled(a.constant_value());
        if (b.is_constant()) return a.scaled(b.constant_value());
        MPoly g1 = gcd(a.num_, b.den_);
        MPoly g2 = gcd(b.num_, a.den_);
        MPoly an = g1.is_constant() ? a.num_ : divide_exact(a.num_, g1);
        MPoly bd = g1.is_constant() ? b.den_ : divide_exact(b.den_, g1);
        MPoly bn = g2.is_constant() ? b.num_ : divide_exact(b.num_, g2);
        MPoly ad = g2.is_constant() ? a.den_ : divide_exact(a.den_, g2);
        return RatFunc(an * bn, ad * bd, Reduce::scale_only, nullptr);
    }

    RatFunc inverse() const {
        if (zero()) throw PoleError("inverse of zero");
        return RatFunc(den_, num_, Reduce::scale_only, nullptr);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.zero()) throw PoleError("division by zero rational function");
        return a * b.inverse();
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc scaled(const Scalar& s) const {
        if (is_zero(s)) return RatFunc();
        RatFunc r = *this;
        r.num_ = r.num_.scaled(s);
        r.rescale();
        return r;
    }

    RatFunc pow(long k) const {
        if (k == 0) return RatFunc(1);
        if (k < 0) return inverse().pow(-k);
        return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)),
                       Reduce::scale_only, nullptr);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Compound assignment with a scalar, used by generic code.
    RatFunc& operator*=(const Scalar& s) { return *this = scaled(s); }

private:
    enum class Reduce { full, partial, scale_only };

    // `hint`, when given, is a polynomial known to contain every common
    // factor of num and den.
    RatFunc(MPoly num, MPoly den, Reduce mode, const MPoly* hint)
        : num_(std::move(num)), den_(std::move(den)) {
        if (mode == Reduce::full) {
            normalize();
            return;
        }
        if (den_.zero()) throw MalformedInput("zero denominator");
        if (num_.zero()) {
            den_ = MPoly(1);
            return;
        }
        if (mode == Reduce::partial && hint && !hint->is_constant()) {
            MPoly g = gcd(num_, *hint);
            if (!g.is_constant()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        strip_monomials();
        rescale();
    }

    void strip_monomials() {
        Monomial m = min_exponents(num_.min_monomial(), den_.min_monomial());
        if (!m.is_one()) {
            Monomial inv = m.inverse();
            num_ = num_.shifted(inv);
            den_ = den_.shifted(inv);
        }
        // remaining common monomial content (both sides positive powers)
        Monomial c = min_exponents_positive(num_.min_monomial(), den_.min_monomial());
        if (!c.is_one()) {
            Monomial inv = c.inverse();
            num_ = num_.shifted(inv);
            den_ = den_.shifted(inv);
        }
    }

    static Monomial min_exponents_positive(const Monomial& a, const Monomial& b) {
        std::vector<Monomial::Entry> out;
        for (const auto& [v, e] : a.entries()) {
            int f = b.exponent(v);
            int m = std::min(e, f);
            if (m > 0) out.emplace_back(v, m);
        }
        return Monomial(std::move(out));
    }

    void normalize() {
        if (den_.zero()) throw MalformedInput("zero denominator");
        if (num_.zero()) {
            den_ = MPoly(1);
            return;
        }
        strip_monomials();
        if (!den_.is_constant() && !num_.is_constant()) {
            MPoly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        rescale();
    }

    /// Make coefficients jointly integral and primitive; trailing term of
    /// den positive.
    void rescale() {
        Integer l = 1, g = 0;
        auto collect_den = [&](const MPoly& p) {
            for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        };
        collect_den(num_);
        collect_den(den_);
        auto collect_num = [&](const MPoly& p) {
            for (const auto& [m, c] : p.terms()) {
                Integer v = c.get_num() * (l / c.get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            }
        };
        collect_num(num_);
        collect_num(den_);
        Scalar s(l, g);
        s.canonicalize();
        if (sgn(den_.coefficient(trailing_monomial(den_))) < 0) s = -s;
        if (s != 1) {
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    MPoly num_;
    MPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.zero(); }

/// Partial assignment of variables to rational values.
using Assignment = std::map<Symbol, Scalar>;

/// Substitution of variables by rational functions.
using Substitution = std::map<Symbol, RatFunc>;

inline std::string to_string(const RatFunc& f);

namespace detail {

inline std::string describe(const Assignment& a) {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, x] : a) {
        if (!first) s += ", ";
        first = false;
        s += v.name() + "=" + x.get_str();
    }
    return s + "}";
}

inline int true_exponent(Symbol v, int e) {
    if (e % v.scale() != 0)
        throw DomainError("fractional power of " + v.name() + " under substitution");
    return e / v.scale();
}

/// Substitute into a polynomial; returns num/den pair of polynomials.
inline std::pair<MPoly, MPoly> substitute_poly(const MPoly& p, const Substitution& sub) {
    // exponent range of each substituted symbol
    std::map<Symbol, std::pair<int, int>> range;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.entries()) {
            if (!sub.count(v)) continue;
            int k = true_exponent(v, e);
            auto [it, fresh] = range.try_emplace(v, std::min(k, 0), std::max(k, 0));
            if (!fresh) {
                it->second.first = std::min(it->second.first, k);
                it->second.second = std::max(it->second.second, k);
            }
        }
    std::map<std::pair<Symbol, int>, MPoly> num_pow, den_pow;
    auto power = [](std::map<std::pair<Symbol, int>, MPoly>& cache, Symbol v, const MPoly& base,
                    int k) -> const MPoly& {
        auto key = std::make_pair(v, k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, base.pow(static_cast<unsigned>(k))).first->second;
    };
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        MPoly term(Monomial{}, c);
        std::vector<Monomial::Entry> kept;
        for (const auto& [v, e] : m.entries()) {
            auto it = sub.find(v);
            if (it == sub.end()) {
                kept.emplace_back(v, e);
                continue;
            }
            int k = true_exponent(v, e);
            auto [lo, hi] = range.at(v);
            if (k - lo) term *= power(num_pow, v, it->second.num(), k - lo);
            if (hi - k) term *= power(den_pow, v, it->second.den(), hi - k);
        }
        // symbols in range but absent from this monomial still need padding
        for (const auto& [v, r] : range) {
            if (m.exponent(v) != 0) continue;
            const RatFunc& val = sub.at(v);
            if (-r.first) term *= power(num_pow, v, val.num(), -r.first);
            if (r.second) term *= power(den_pow, v, val.den(), r.second);
        }
        out += term.shifted(Monomial(std::move(kept)));
    }
    MPoly mult(1);
    for (const auto& [v, r] : range) {
        const RatFunc& val = sub.at(v);
        if (r.second) mult *= val.den().pow(static_cast<unsigned>(r.second));
        if (-r.first) mult *= val.num().pow(static_cast<unsigned>(-r.first));
    }
    return {std::move(out), std::move(mult)};
}

}  // namespace detail

/// Substitute rational functions for variables and renormalize.
inline RatFunc substitute(const RatFunc& f, const Substitution& sub) {
    if (sub.empty()) return f;
    for (const auto& [v, val] : sub)
        if (val.zero()) {
            // zero values are only allowed at non-negative exponents
            for (const auto* p : {&f.num(), &f.den()})
                for (const auto& [m, c] : p->terms())
                    if (m.exponent(v) < 0) throw PoleError(v.name() + "=0");
        }
    auto [nn, nm] = detail::substitute_poly(f.num(), sub);
    auto [dn, dm] = detail::substitute_poly(f.den(), sub);
    if (dn.zero()) {
        std::string where = "{";
        bool first = true;
        for (const auto& [v, val] : sub) {
            if (!first) where += ", ";
            first = false;
            where += v.name() + "=" + to_string(val);
        }
        throw PoleError(where + "}");
    }
    return RatFunc(nn * dm, dn * nm);
}

/// Evaluate at a partial assignment of rational values.
inline RatFunc evaluate(const RatFunc& f, const Assignment& a) {
    Substitution sub;
    for (const auto& [v, x] : a) sub.emplace(v, RatFunc(x));
    try {
        return substitute(f, sub);
    } catch (const PoleError&) {
        throw PoleError(detail::describe(a));
    }
}

/// Full evaluation to a rational number. Every variable must be assigned.
inline Scalar evaluate_scalar(const RatFunc& f, const Assignment& a) {
    auto eval_poly = [&](const MPoly& p) {
        Scalar total = 0;
        for (const auto& [m, c] : p.terms()) {
            Scalar term = c;
            for (const auto& [v, e] : m.entries()) {
                auto it = a.find(v);
                if (it == a.end()) throw DomainError("unassigned variable " + v.name());
                term *= pow(it->second, detail::true_exponent(v, e));
            }
            total += term;
        }
        return total;
    };
    Scalar d = eval_poly(f.den());
    if (is_zero(d)) throw PoleError(detail::describe(a));
    return eval_poly(f.num()) / d;
}

inline RatFunc operator+(const RatFunc& a, long b) { return a + RatFunc(b); }
inline RatFunc operator+(long a, const RatFunc& b) { return RatFunc(a) + b; }
inline RatFunc operator-(const RatFunc& a, long b) { return a - RatFunc(b); }
inline RatFunc operator-(long a, const RatFunc& b) { return RatFunc(a) - b; }
inline RatFunc operator*(long a, const RatFunc& b) { return b.scaled(Scalar(a)); }
inline RatFunc operator*(const RatFunc& a, long b) { return a.scaled(Scalar(b)); }
inline RatFunc operator/(const RatFunc& a, long b) { return a.scaled(Scalar(1, b) * 1); }

/// Convenience: q^{k/4} style monomial in the deformation parameters.
inline RatFunc var(std::string_view name, int power = 1) {
    Symbol s(name);
    return RatFunc::monomial(Monomial(s, power * s.scale()));
}

/// Monomial q^{a/4} t^{b/4}.
inline Monomial qt_quarter(int a, int b) {
    std::vector<Monomial::Entry> e;
    if (a) e.emplace_back(Symbol("q"), a);
    if (b) e.emplace_back(Symbol("t"), b);
    return Monomial(std::move(e));
}

}  // namespace qtkern
