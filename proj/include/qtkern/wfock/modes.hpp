#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtkern/exactalg.hpp"
#include "qtkern/macdonald/symfunc.hpp"

namespace qtkern {

/// Coefficient of the n-th mode as a rational function of Qn = q^{n/4} and
/// Tn = t^{n/4}. The 1/n in front of every mode sum is left implicit.
using ModeCoeff = RatFunc;

inline Symbol qn_symbol() { return sym("Qn"); }
inline Symbol tn_symbol() { return sym("Tn"); }

/// q^{kn/4} t^{ln/4}.
inline ModeCoeff mode_monomial(int k, int l) {
    std::vector<Monomial::Entry> e;
    if (k) e.emplace_back(qn_symbol(), k);
    if (l) e.emplace_back(tn_symbol(), l);
    return RatFunc::monomial(Monomial(std::move(e)));
}

inline ModeCoeff q_mode(int k) { return mode_monomial(4 * k, 0); }
inline ModeCoeff t_mode(int k) { return mode_monomial(0, 4 * k); }
/// p^{en/4} with p = q/t.
inline ModeCoeff p_mode_quarter(int e) { return mode_monomial(e, -e); }
inline ModeCoeff p_mode(int k) { return p_mode_quarter(4 * k); }

/// (1-q^n)/(1-t^n), the Heisenberg bracket [a_n, a_{-n}] / n.
inline ModeCoeff heisenberg_bracket() { return (RatFunc(1) - q_mode(1)) / (RatFunc(1) - t_mode(1)); }

/// The n = 1 value, as a function of q^{1/4}, t^{1/4}.
inline RatFunc at_first_mode(const ModeCoeff& c) {
    return substitute(c, {{qn_symbol(), RatFunc::monomial(qt_quarter(1, 0))},
                          {tn_symbol(), RatFunc::monomial(qt_quarter(0, 1))}});
}

/// The scalar exp(sum_{n>0} S(n) x^n / n). When S(n) is a Laurent
/// polynomial -sum s mu^n with integer s, the scalar is prod (1 - mu x)^s.
class StructureFunction {
public:
    /// (mu as a monomial in q^{1/4}, t^{1/4}; exponent s)
    using Factor = std::pair<Monomial, long>;

    StructureFunction() = default;
    explicit StructureFunction(ModeCoeff log_coeff) : log_(std::move(log_coeff)) { product_ = factorize(log_); }

    static StructureFunction from_product(const std::vector<Factor>& factors) {
        return StructureFunction(log_of_product(factors));
    }

    const ModeCoeff& log_coeff() const noexcept { return log_; }
    const std::optional<std::vector<Factor>>& product_form() const noexcept { return product_; }
    bool is_rational() const noexcept { return product_.has_value(); }
    bool is_trivial() const { return log_.zero(); }

    /// x -> p^{e/4} x.
    StructureFunction shifted(int p_quarter) const { return StructureFunction(log_ * p_mode_quarter(p_quarter)); }
    StructureFunction inverse() const { return StructureFunction(-log_); }

    friend StructureFunction operator*(const StructureFunction& a, const StructureFunction& b) {
        return StructureFunction(a.log_ + b.log_);
    }
    friend bool operator==(const StructureFunction& a, const StructureFunction& b) { return a.log_ == b.log_; }

    /// The scalar as a rational function of x; only for rational scalars.
    RatFunc rational(const RatFunc& x) const {
        if (!product_) throw DomainError("structure function is not a finite product: " + to_string(log_));
        RatFunc r(1);
        for (const auto& [mu, s] : *product_) r *= (RatFunc(1) - RatFunc::monomial(mu) * x).pow(s);
        return r;
    }

    static ModeCoeff log_of_product(const std::vector<Factor>& factors) {
        ModeCoeff s;
        for (const auto& [mu, e] : factors)
            s -= RatFunc(Scalar(e)) * mode_monomial(mu.exponent(sym("q")), mu.exponent(sym("t")));
        return s;
    }

private:
    static std::optional<std::vector<Factor>> factorize(const ModeCoeff& s) {
        std::vector<Factor> out;
        if (s.zero()) return out;
        if (s.den().size() != 1) return std::nullopt;
        const auto& [dm, dc] = *s.den().terms().begin();
        for (const auto& [m, c] : s.num().terms()) {
            Scalar coef = -c / dc;
            if (coef.get_den() != 1 || !coef.get_num().fits_slong_p()) return std::nullopt;
            Monomial mu = m / dm;
            for (const auto& [v, e] : mu.entries())
                if (v != qn_symbol() && v != tn_symbol()) return std::nullopt;
            out.emplace_back(qt_quarter(mu.exponent(qn_symbol()), mu.exponent(tn_symbol())), coef.get_num().get_si());
        }
        return out;
    }

    ModeCoeff log_;
    std::optional<std::vector<Factor>> product_;
};

}  // namespace qtkern
