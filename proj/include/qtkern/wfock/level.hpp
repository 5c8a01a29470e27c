#pragma once

#include <string>
#include <vector>

#include "qtkern/wfock/structure.hpp"
#include "qtkern/wfock/vertex.hpp"

namespace qtkern {

/// Level one vertex operators of the quantum toroidal algebra.
namespace level1 {
inline ModeCoeff one_minus_t() { return RatFunc(1) - t_mode(1); }
inline ModeCoeff one_minus_t_inv() { return RatFunc(1) - t_mode(-1); }
inline ModeCoeff one_minus_p_inv() { return RatFunc(1) - p_mode(-1); }

inline Slot eta() { return {one_minus_t_inv(), -one_minus_t()}; }
inline Slot xi() { return {-one_minus_t_inv() * p_mode_quarter(-2), one_minus_t() * p_mode_quarter(-2)}; }
inline Slot phi_plus() { return {RatFunc(), -one_minus_t() * one_minus_p_inv() * p_mode_quarter(1)}; }
inline Slot phi_minus() { return {one_minus_t_inv() * one_minus_p_inv() * p_mode_quarter(1), RatFunc()}; }

/// b_n -> B(n)/n a_n: (B for n > 0, B for -n < 0) without the 1/n.
inline ModeCoeff b_positive() { return -one_minus_t() * (p_mode_quarter(2) - p_mode_quarter(-2)); }
inline ModeCoeff b_negative() { return -one_minus_t_inv() * (p_mode_quarter(2) - p_mode_quarter(-2)); }
}  // namespace level1

inline Symbol y_symbol(int i) { return sym("y" + std::to_string(i)); }
inline RatFunc y_var(int i) { return RatFunc(y_symbol(i)); }

/// Scalar multiple of a vertex operator.
struct OperatorTerm {
    RatFunc coefficient;
    VertexOperator op;
};
using OperatorSum = std::vector<OperatorTerm>;

inline OperatorSum shifted(const OperatorSum& s, int p_quarter) {
    OperatorSum r;
    for (const auto& t : s) r.push_back({t.coefficient, t.op.shifted(p_quarter)});
    return r;
}

/// The level m representation built as an m-fold tensor product of level
/// one Fock modules. Indices are 1-based in names and 0-based in vectors.
struct LevelRep {
    int m = 0;
    std::vector<ModeCoeff> b_positive, b_negative;  // rho(b_{+-n}) per slot, from the coproduct
    VertexOperator alpha, beta, psi_plus, psi_minus;
    std::vector<VertexOperator> Lambda_tilde, Lambda_tilde_star, Lambda, Lambda_star;

    const VertexOperator& L(int i) const { return Lambda.at(static_cast<std::size_t>(i - 1)); }
    const VertexOperator& Ls(int i) const { return Lambda_star.at(static_cast<std::size_t>(i - 1)); }

    /// Closed form of rho(b_{+-n}) in slot i.
    ModeCoeff b_closed(int i, bool positive) const {
        ModeCoeff base = positive ? level1::one_minus_t() : level1::one_minus_t_inv();
        return -base * level1::one_minus_p_inv() * p_mode_quarter(2 * (m - i + 1));
    }

    /// T_i(z) = sum y_J :Lambda_{j1}(z) Lambda_{j2}(pz) ...:.
    OperatorSum T(int i) const { return subset_sum(i, false); }
    /// T*_i(z) = sum y_J^{-1} :Lambda*_{j1}(z) Lambda*_{j2}(z/p) ...:.
    OperatorSum T_star(int i) const { return subset_sum(i, true); }

private:
    OperatorSum subset_sum(int size, bool star) const {
        OperatorSum out;
        std::vector<int> J;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(J.size()) == size) {
                VertexOperator v = VertexOperator::identity(m);
                RatFunc c(1);
                for (std::size_t k = 0; k < J.size(); ++k) {
                    int e = 4 * static_cast<int>(k);
                    v = normal_product(v, star ? Ls(J[k]).shifted(-e) : L(J[k]).shifted(e));
                    c *= star ? y_var(J[k]).inverse() : y_var(J[k]);
                }
                out.push_back({c, v});
                return;
            }
            for (int j = next; j <= m; ++j) {
                J.push_back(j);
                self(self, j + 1);
                J.pop_back();
            }
        };
        rec(rec, 1);
        return out;
    }
};

inline LevelRep build_level_m(int m) {
    if (m < 2) throw DomainError("level must be at least 2, got " + std::to_string(m));
    LevelRep r;
    r.m = m;
    // iterated coproduct: b_n -> sum_i 1^{(i-1)} (x) b_n (x) gamma^{-|n|} on the m-i slots to the right
    for (int i = 1; i <= m; ++i) {
        ModeCoeff right = p_mode_quarter(2 * (m - i));
        r.b_positive.push_back(level1::b_positive() * right);
        r.b_negative.push_back(level1::b_negative() * right);
    }
    ModeCoeff g = gamma_mode(m);
    ModeCoeff g_diff = g - g.inverse();
    ModeCoeff g_half = p_mode_quarter(-m);
    std::vector<Slot> a(m), b(m), pp(m), pm(m);
    for (int i = 0; i < m; ++i) {
        const auto& bp = r.b_positive[static_cast<std::size_t>(i)];
        const auto& bn = r.b_negative[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(i)].creation = -bn / g_diff;
        b[static_cast<std::size_t>(i)].annihilation = bp / g_diff;
        pp[static_cast<std::size_t>(i)].annihilation = bp * g_half;
        pm[static_cast<std::size_t>(i)].creation = -bn * g_half;
    }
    r.alpha = VertexOperator(a);
    r.beta = VertexOperator(b);
    r.psi_plus = VertexOperator(pp);
    r.psi_minus = VertexOperator(pm);
    for (int i = 1; i <= m; ++i) {
        std::vector<Slot> s(m), ss(m);
        for (int k = 1; k < i; ++k) s[static_cast<std::size_t>(k - 1)] = level1::phi_minus().shifted(-(2 * k - 1));
        s[static_cast<std::size_t>(i - 1)] = level1::eta().shifted(-2 * (i - 1));
        ss[static_cast<std::size_t>(i - 1)] = level1::xi().shifted(-2 * (m - i));
        for (int k = i + 1; k <= m; ++k)
            ss[static_cast<std::size_t>(k - 1)] = level1::phi_plus().shifted(-(2 * m - 2 * k + 1));
        r.Lambda_tilde.emplace_back(s);
        r.Lambda_tilde_star.emplace_back(ss);
    }
    for (int i = 0; i < m; ++i) {
        const auto& lt = r.Lambda_tilde[static_cast<std::size_t>(i)];
        const auto& lts = r.Lambda_tilde_star[static_cast<std::size_t>(i)];
        r.Lambda.push_back(ordered_product(ordered_product(r.alpha, lt), r.beta));
        // alpha(p^{-1} z)^{-1} Lambda~*(p^{(m-2)/2} z) beta(gamma^{-2} p^{-1} z)^{-1}
        VertexOperator ai = r.alpha.shifted(-4).inverse();
        VertexOperator bi = r.beta.shifted(4 * (m - 1)).inverse();
        r.Lambda_star.push_back(ordered_product(ordered_product(ai, lts.shifted(2 * (m - 2))), bi));
    }
    return r;
}

}  // namespace qtkern
