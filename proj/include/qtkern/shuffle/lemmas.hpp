#pragma once

#include <string>
#include <utility>
#include <functional>
#include <vector>

#include "qtkern/report.hpp"
#include "qtkern/shuffle/omega.hpp"
#include "qtkern/shuffle/sampling.hpp"

namespace qtkern {

/// gamma_+(z,w;q,t) = (z - w/q)(z - q w/t) / ((z - w)(z - w/t)).
inline RatFunc gamma_plus_eval(const RatFunc& z, const RatFunc& w, const RatFunc& q, const RatFunc& t) {
    return (z - q.inverse() * w) * (z - q / t * w) / ((z - w) * (z - t.inverse() * w));
}

/// gamma_-(z,w;q,t) = (z - q w)(z - t w/q) / ((z - w)(z - t w)).
inline RatFunc gamma_minus_eval(const RatFunc& z, const RatFunc& w, const RatFunc& q, const RatFunc& t) {
    return (z - q * w) * (z - t / q * w) / ((z - w) * (z - t * w));
}

namespace detail {

/// prefactor * prod (1 - c v)^e in one variable v = w/z, with c and the
/// prefactor monomials in q, t (the prefactor may also carry v). Products of
/// such binomials factor uniquely, so equality is equality of the data.
class BinomialProduct {
public:
    /// (1 - c v)^e
    BinomialProduct& one_minus_v(const RatFunc& c, long e = 1) {
        for (auto& [r, m] : roots_)
            if (r == c) {
                m += e;
                return *this;
            }
        roots_.emplace_back(c, e);
        return *this;
    }
    /// (1 - c / v)^e = (-c/v)^e (1 - v/c)^e
    BinomialProduct& one_minus_u(const RatFunc& c, long e = 1) {
        pre_ *= (-c / RatFunc(v_symbol())).pow(e);
        return one_minus_v(c.inverse(), e);
    }
    /// (A z - B w)^e with z = 1, w = v
    BinomialProduct& linear(const RatFunc& A, const RatFunc& B, long e = 1) {
        pre_ *= A.pow(e);
        return one_minus_v(B / A, e);
    }
    /// (c v; q)_n or (c/v; q)_n
    BinomialProduct& pochhammer_v(RatFunc c, long n, long e = 1) {
        for (long i = 0; i < n; ++i, c *= q_pow(1)) one_minus_v(c, e);
        return *this;
    }
    BinomialProduct& pochhammer_u(RatFunc c, long n, long e = 1) {
        for (long i = 0; i < n; ++i, c *= q_pow(1)) one_minus_u(c, e);
        return *this;
    }

    friend bool operator==(const BinomialProduct& a, const BinomialProduct& b) {
        if (a.pre_ != b.pre_) return false;
        auto ka = a.support(), kb = b.support();
        if (ka.size() != kb.size()) return false;
        for (const auto& [r, m] : ka) {
            bool found = false;
            for (const auto& [s, n] : kb)
                if (r == s && m == n) found = true;
            if (!found) return false;
        }
        return true;
    }

    std::string describe() const {
        std::string s = to_string(pre_);
        for (const auto& [r, m] : support()) s += " (1-(" + to_string(r) + ")v)^" + std::to_string(m);
        return s;
    }

    static Symbol v_symbol() { return sym("v"); }

private:
    std::vector<std::pair<RatFunc, long>> support() const {
        std::vector<std::pair<RatFunc, long>> out;
        for (const auto& rm : roots_)
            if (rm.second) out.push_back(rm);
        return out;
    }

    RatFunc pre_{1};
    std::vector<std::pair<RatFunc, long>> roots_;
};

/// gamma_+- (a z, b w) with z = 1, w = v, as binomials.
inline void gamma_factors(BinomialProduct& p, bool plus, const RatFunc& a, const RatFunc& b) {
    const RatFunc q = q_pow(1), t = t_pow(1);
    if (plus) {
        p.linear(a, q.inverse() * b).linear(a, q / t * b).linear(a, b, -1).linear(a, t.inverse() * b, -1);
    } else {
        p.linear(a, q * b).linear(a, t / q * b).linear(a, b, -1).linear(a, t * b, -1);
    }
}

struct NumericPoint {
    RatFunc q, t, v;
};

inline RatFunc numeric_poch(const RatFunc& u, long n, const RatFunc& q) { return pochhammer(u, n, q); }

inline CheckRecord lemma_record(const std::string& name, long theta, long rho) {
    CheckRecord r;
    r.check = "pochhammer_" + name;
    r.witness["theta"] = std::to_string(theta);
    if (rho) r.witness["rho"] = std::to_string(rho);
    return r;
}

}  // namespace detail

/// The gamma_+- relations to omega and epsilon_2, and the six product
/// formulas for gamma_+- on q-shifted arguments, for theta, rho <= bound.
/// Each product formula is compared in factored form and, independently, by
/// direct evaluation at `points` seeded rational (q, t, z/w).
inline std::vector<CheckRecord> verify_pochhammer_lemmas(int bound = 5, int points = 2, std::uint64_t seed = 3) {
    using detail::BinomialProduct;
    const RatFunc q = q_pow(1), t = t_pow(1);
    std::vector<CheckRecord> out;
    {
        const RatFunc z(sym("z")), w(sym("w"));
        Parameters par;
        RatFunc gp = gamma_plus_eval(z, w, q, t), gm = gamma_minus_eval(z, w, q, t);
        auto rec = [&](const char* name, const RatFunc& lhs, const RatFunc& rhs) {
            auto r = detail::lemma_record(name, 0, 0);
            r.witness.erase("theta");
            r.verdict = lhs == rhs;
            r.value = r.verdict ? "identity" : to_string(lhs - rhs);
            out.push_back(std::move(r));
        };
        rec("omega_eps_plus", omega_eval(z, w, par) / epsilon_pair(z, w, t), gp);
        rec("omega_eps_minus", omega_eval(w, z, par) / epsilon_pair(w, z, t), gm);
        rec("omega_ratio", omega_eval(w, z, par) / omega_eval(z, w, par), gm / gp);
    }
    Sampler sampler(seed);
    std::vector<detail::NumericPoint> pts;
    for (int k = 0; k < points; ++k) {
        Parameters p = sampler.parameters();
        pts.push_back({p.q, p.t, RatFunc(sampler.rational(12))});
    }
    auto Q = [](long e) { return q_pow(static_cast<int>(e)); };
    // (name, theta, rho) -> (lhs factored, rhs factored, lhs numeric, rhs numeric)
    auto check = [&](const std::string& name, long th, long rh, const BinomialProduct& lhs,
                     const BinomialProduct& rhs, const std::function<RatFunc(const detail::NumericPoint&)>& lhs_num,
                     const std::function<RatFunc(const detail::NumericPoint&)>& rhs_num) {
        auto r = detail::lemma_record(name, th, rh);
        bool sym_ok = lhs == rhs;
        bool num_ok = true;
        for (const auto& p : pts)
            try {
                if (lhs_num(p) != rhs_num(p)) num_ok = false;
            } catch (const PoleError&) {
                // a sampled point on a pole of either side carries no information
            }
        r.verdict = sym_ok && num_ok;
        r.value = r.verdict ? "identity" : "lhs " + lhs.describe() + " | rhs " + rhs.describe();
        r.witness["factored"] = sym_ok ? "equal" : "differ";
        r.witness["numeric"] = num_ok ? "equal" : "differ";
        out.push_back(std::move(r));
    };
    for (long th = 1; th <= bound; ++th) {
        for (bool plus : {true, false}) {
            BinomialProduct lhs, rhs;
            for (long i = 1; i <= th; ++i)
                for (long j = i + 1; j <= th; ++j) detail::gamma_factors(lhs, plus, Q(-i), Q(-j));
            // u = z/w = 1/v
            if (plus) {
                rhs.one_minus_u(t, th).one_minus_u(q, -th).pochhammer_u(q, th).pochhammer_u(t, th, -1);
            } else {
                rhs.one_minus_u(RatFunc(1), th).one_minus_u(q / t, -th).pochhammer_u(q / t, th).pochhammer_u(RatFunc(1), th, -1);
            }
            auto ln = [&, plus, th](const detail::NumericPoint& p) {
                RatFunc r(1);
                for (long i = 1; i <= th; ++i)
                    for (long j = i + 1; j <= th; ++j) {
                        RatFunc a = p.q.pow(-i), b = p.q.pow(-j) * p.v;
                        r *= plus ? gamma_plus_eval(a, b, p.q, p.t) : gamma_minus_eval(a, b, p.q, p.t);
                    }
                return r;
            };
            auto rn = [&, plus, th](const detail::NumericPoint& p) {
                RatFunc u = p.v.inverse();
                if (plus)
                    return ((RatFunc(1) - p.t * u) / (RatFunc(1) - p.q * u)).pow(th) * detail::numeric_poch(p.q * u, th, p.q) /
                           detail::numeric_poch(p.t * u, th, p.q);
                return ((RatFunc(1) - u) / (RatFunc(1) - p.q / p.t * u)).pow(th) *
                       detail::numeric_poch(p.q / p.t * u, th, p.q) / detail::numeric_poch(u, th, p.q);
            };
            check(plus ? "+:tri" : "-:tri", th, 0, lhs, rhs, ln, rn);
        }
        for (long rh = 1; rh <= bound; ++rh)
            for (bool plus : {true, false}) {
                BinomialProduct lhs, r1, r2;
                for (long l = 1; l <= th; ++l)
                    for (long k = 1; k <= rh; ++k) detail::gamma_factors(lhs, plus, Q(-l), Q(-k));
                if (plus) {
                    r1.pochhammer_v(Q(-rh), th).pochhammer_v(RatFunc(1), th, -1).pochhammer_v(q / t, th).pochhammer_v(
                        Q(1 - rh) / t, th, -1);
                    r2.pochhammer_u(Q(rh - th + 1), th).pochhammer_u(Q(1 - th), th, -1).pochhammer_u(Q(-th) * t, th)
                        .pochhammer_u(Q(rh - th) * t, th, -1);
                } else {
                    r1.pochhammer_v(q, th).pochhammer_v(Q(1 - rh), th, -1).pochhammer_v(Q(-rh) * t, th).pochhammer_v(
                        t, th, -1);
                    r2.pochhammer_u(Q(-th), th).pochhammer_u(Q(rh - th), th, -1).pochhammer_u(Q(rh - th + 1) / t, th)
                        .pochhammer_u(Q(1 - th) / t, th, -1);
                }
                auto ln = [&, plus, th, rh](const detail::NumericPoint& p) {
                    RatFunc r(1);
                    for (long l = 1; l <= th; ++l)
                        for (long k = 1; k <= rh; ++k) {
                            RatFunc a = p.q.pow(-l), b = p.q.pow(-k) * p.v;
                            r *= plus ? gamma_plus_eval(a, b, p.q, p.t) : gamma_minus_eval(a, b, p.q, p.t);
                        }
                    return r;
                };
                auto poch = [](const RatFunc& u, long n, const RatFunc& qq) { return detail::numeric_poch(u, n, qq); };
                auto rn1 = [&, plus, th, rh](const detail::NumericPoint& p) {
                    const RatFunc &qq = p.q, &tt = p.t, &v = p.v;
                    if (plus)
                        return poch(qq.pow(-rh) * v, th, qq) / poch(v, th, qq) * poch(qq / tt * v, th, qq) /
                               poch(qq.pow(1 - rh) / tt * v, th, qq);
                    return poch(qq * v, th, qq) / poch(qq.pow(1 - rh) * v, th, qq) * poch(qq.pow(-rh) * tt * v, th, qq) /
                           poch(tt * v, th, qq);
                };
                auto rn2 = [&, plus, th, rh](const detail::NumericPoint& p) {
                    const RatFunc &qq = p.q, &tt = p.t, u = p.v.inverse();
                    if (plus)
                        return poch(qq.pow(rh - th + 1) * u, th, qq) / poch(qq.pow(1 - th) * u, th, qq) *
                               poch(qq.pow(-th) * tt * u, th, qq) / poch(qq.pow(rh - th) * tt * u, th, qq);
                    return poch(qq.pow(-th) * u, th, qq) / poch(qq.pow(rh - th) * u, th, qq) *
                           poch(qq.pow(rh - th + 1) / tt * u, th, qq) / poch(qq.pow(1 - th) / tt * u, th, qq);
                };
                check(plus ? "+:1" : "-:1", th, rh, lhs, r1, ln, rn1);
                check(plus ? "+:2" : "-:2", th, rh, lhs, r2, ln, rn2);
            }
    }
    return out;
}

}  // namespace qtkern
