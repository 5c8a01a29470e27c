#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtkern/exactalg.hpp"
#include "qtkern/report.hpp"
#include "qtkern/wfock/level.hpp"

namespace qtkern {

namespace detail {

inline Symbol x_symbol() { return sym("x"); }

inline void check_level_range(int m, int lo, int hi, const char* what) {
    if (m < lo || m > hi)
        throw DomainError(std::string(what) + ": level " + std::to_string(m) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

inline CheckRecord wfock_record(std::string check, int m, bool ok, std::string value, std::string note = {}) {
    CheckRecord r;
    r.check = std::move(check);
    r.witness["m"] = std::to_string(m);
    r.verdict = ok;
    r.value = std::move(value);
    r.note = std::move(note);
    return r;
}

/// p^{e/4} as a function of q, t.
inline RatFunc p_quarter_value(int e) { return RatFunc::monomial(qt_quarter(e, -e)); }

/// e with a = p^{e/4}, if a is such a monomial.
inline std::optional<int> p_quarter_exponent(const RatFunc& a) {
    if (a.num().size() != 1 || a.den().size() != 1) return std::nullopt;
    const auto& [nm, nc] = *a.num().terms().begin();
    const auto& [dm, dc] = *a.den().terms().begin();
    if (nc != dc) return std::nullopt;
    Monomial m = nm / dm;
    int e = m.exponent(sym("q"));
    if (m.exponent(sym("t")) != -e || m.entries().size() != (e ? 2u : 0u)) return std::nullopt;
    return e;
}

inline std::string p_power_string(int e) { return e % 4 ? "p^(" + std::to_string(e) + "/4)" : "p^" + std::to_string(e / 4); }

}  // namespace detail

/// Lambda_i(z) Lambda_j(w) and the starred version: f_{1,m} times gamma_+- or 1.
inline std::vector<CheckRecord> verify_lambda_ope(int m) {
    detail::check_level_range(m, 2, 4, "verify_lambda_ope");
    LevelRep r = build_level_m(m);
    ModeCoeff f = f_log(1, m);
    std::vector<CheckRecord> out;
    for (int star = 0; star < 2; ++star)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                const auto& a = star ? r.Ls(i) : r.L(i);
                const auto& b = star ? r.Ls(j) : r.L(j);
                ModeCoeff s = f + contraction_log(a, b);
                bool plus = (i < j) != (star == 1);
                ModeCoeff e = i == j ? RatFunc() : plus ? gamma_plus_log(p_mode(1)) : gamma_minus_log(p_mode(1));
                auto rec = detail::wfock_record(star ? "lambda_star_ope" : "lambda_ope", m, s == e, to_string(s),
                                                i == j ? "1" : plus ? "gamma_+(z,w;q,p)" : "gamma_-(z,w;q,p)");
                rec.witness["i"] = std::to_string(i);
                rec.witness["j"] = std::to_string(j);
                out.push_back(std::move(rec));
            }
    return out;
}

/// Products of all Lambda (Lambda*) are trivial, Lambda*_k from the Lambda_i,
/// and T*_1 = (y_1...y_m)^{-1} T_{m-1}. Lambda*_k is
/// checked with Lambda_i(p^{i-1} z) for i < k; the displayed argument
/// p^{k-1} z is reported separately as "lambda_star_literal".
inline std::vector<CheckRecord> verify_lambda_identities(int m) {
    detail::check_level_range(m, 2, 4, "verify_lambda_identities");
    LevelRep r = build_level_m(m);
    std::vector<CheckRecord> out;
    VertexOperator v = VertexOperator::identity(m), w = v;
    for (int i = 1; i <= m; ++i) {
        v = normal_product(v, r.L(i).shifted(4 * (i - 1)));
        w = normal_product(w, r.Ls(i).shifted(-4 * (i - 1)));
    }
    out.push_back(detail::wfock_record("lambda_product_trivial", m, v.is_identity(), to_string(v)));
    out.push_back(detail::wfock_record("lambda_star_product_trivial", m, w.is_identity(), to_string(w)));
    for (int k = 1; k <= m; ++k) {
        VertexOperator lit = VertexOperator::identity(m), cor = lit;
        for (int i = 1; i < k; ++i) {
            lit = normal_product(lit, r.L(i).shifted(4 * (k - 1)));
            cor = normal_product(cor, r.L(i).shifted(4 * (i - 1)));
        }
        for (int l = k + 1; l <= m; ++l) {
            lit = normal_product(lit, r.L(l).shifted(4 * (l - 2)));
            cor = normal_product(cor, r.L(l).shifted(4 * (l - 2)));
        }
        auto a = detail::wfock_record("lambda_star_from_lambda", m, cor.same_modes(r.Ls(k)), to_string(cor),
                                      "Lambda_i at p^{i-1} z for i < k");
        a.witness["k"] = std::to_string(k);
        out.push_back(std::move(a));
        bool lit_ok = lit.same_modes(r.Ls(k));
        auto b = detail::wfock_record("lambda_star_literal", m, lit_ok, lit_ok ? "agrees" : "differs",
                                      "Lambda_i at p^{k-1} z for i < k");
        b.informational = true;
        b.witness["k"] = std::to_string(k);
        out.push_back(std::move(b));
    }
    // T*_1 against (y_1...y_m)^{-1} T_{m-1}, term by term
    OperatorSum ts = r.T_star(1), tm = r.T(m - 1);
    RatFunc yprod(1);
    for (int i = 1; i <= m; ++i) yprod *= y_var(i);
    bool ok = ts.size() == tm.size();
    for (const auto& a : ts) {
        bool found = false;
        for (const auto& b : tm)
            if (a.op.same_modes(b.op) && a.coefficient * a.op.prefactor() == b.coefficient * b.op.prefactor() / yprod)
                found = true;
        ok = ok && found;
    }
    out.push_back(detail::wfock_record("T_star_1_from_T_m-1", m, ok, ok ? "equal" : "differ"));
    OperatorSum tmm = r.T(m), tsm = r.T_star(m);
    bool const_ok = tmm.size() == 1 && tmm[0].op.is_identity() && tmm[0].coefficient == yprod &&
                    tsm.size() == 1 && tsm[0].op.is_identity() && tsm[0].coefficient == yprod.inverse();
    out.push_back(detail::wfock_record("T_m_constant", m, const_ok, to_string(tmm.at(0).coefficient)));
    return out;
}

/// Scalar structure of t, t* against alpha, beta, psi+-, both orders, plus
/// the alpha/beta exchange factor and the closed form of rho(b_n).
inline std::vector<CheckRecord> verify_commutants(int m) {
    detail::check_level_range(m, 2, 4, "verify_commutants");
    LevelRep r = build_level_m(m);
    std::vector<CheckRecord> out;
    const std::pair<const char*, const VertexOperator*> others[] = {
        {"alpha", &r.alpha}, {"beta", &r.beta}, {"psi+", &r.psi_plus}, {"psi-", &r.psi_minus}};
    for (int star = 0; star < 2; ++star)
        for (int i = 1; i <= m; ++i)
            for (const auto& [name, op] : others) {
                const auto& l = star ? r.Ls(i) : r.L(i);
                ModeCoeff a = contraction_log(l, *op), b = contraction_log(*op, l);
                auto rec = detail::wfock_record(std::string(star ? "t*" : "t") + "_commutes_" + name, m,
                                                a.zero() && b.zero(), to_string(a) + " | " + to_string(b));
                rec.witness["i"] = std::to_string(i);
                out.push_back(std::move(rec));
            }
    ModeCoeff g = gamma_mode(m);
    ModeCoeff expect = (RatFunc(1) - q_mode(1)) * (RatFunc(1) - t_mode(-1)) * (RatFunc(1) - p_mode(-1)) /
                       (g - g.inverse()) * g.inverse();
    ModeCoeff got = contraction_log(r.beta, r.alpha);
    out.push_back(detail::wfock_record("beta_alpha_exchange", m, got == expect, to_string(got)));
    bool b_ok = true;
    for (int i = 1; i <= m; ++i)
        b_ok = b_ok && r.b_positive[static_cast<std::size_t>(i - 1)] == r.b_closed(i, true) &&
               r.b_negative[static_cast<std::size_t>(i - 1)] == r.b_closed(i, false);
    out.push_back(detail::wfock_record("b_mode_coproduct", m, b_ok, b_ok ? "closed form" : "mismatch"));
    // [b_n, b_{-n}] summed over slots
    ModeCoeff bb;
    for (int i = 0; i < m; ++i)
        bb += r.b_positive[static_cast<std::size_t>(i)] * r.b_negative[static_cast<std::size_t>(i)];
    bb *= heisenberg_bracket();
    ModeCoeff want_bb = (RatFunc(1) - q_mode(-1)) * (RatFunc(1) - t_mode(1)) * (RatFunc(1) - p_mode(1)) *
                        (g - g.inverse()) * g.inverse();
    out.push_back(detail::wfock_record("b_mode_bracket", m, bb == want_bb, to_string(bb)));
    bool abf = A_log(g) == f_log(1, m) && B_log(g) == f_log(m - 1, m);
    out.push_back(detail::wfock_record("A_B_are_f", m, abf, to_string(A_log(g)) + " | " + to_string(B_log(g))));
    return out;
}

/// Level one images and the structure-function properties that do not
/// depend on m.
inline std::vector<CheckRecord> verify_level_one() {
    std::vector<CheckRecord> out;
    ModeCoeff half = p_mode_quarter(-1);
    bool psi = level1::b_positive() * half == level1::phi_plus().annihilation &&
               -level1::b_negative() * half == level1::phi_minus().creation;
    out.push_back(detail::wfock_record("level1_psi", 1, psi, psi ? "phi+-" : "mismatch"));
    // eta(z) eta(w) = (1-x)(1-px)/((1-qx)(1-x/t)) :eta eta:
    VertexOperator eta({level1::eta()});
    StructureFunction s(contraction_log(eta, eta));
    RatFunc x(detail::x_symbol());
    RatFunc want = (RatFunc(1) - x) * (RatFunc(1) - q_pow(1) / t_pow(1) * x) /
                   ((RatFunc(1) - q_pow(1) * x) * (RatFunc(1) - t_pow(-1) * x));
    bool eta_ok = s.is_rational() && s.rational(x) == want;
    out.push_back(detail::wfock_record("level1_eta_eta", 1, eta_ok, s.is_rational() ? to_string(s.rational(x)) : "-"));
    // g(1/z): S(n) -> S(-n), i.e. Qn, Tn inverted
    ModeCoeff g_inv =
        substitute(g_log(), {{qn_symbol(), RatFunc(qn_symbol()).inverse()}, {tn_symbol(), RatFunc(tn_symbol()).inverse()}});
    out.push_back(detail::wfock_record("g_unitarity", 1, (g_log() + g_inv).zero(), to_string(g_log() + g_inv)));
    bool f11 = f_log(1, 1).zero();
    out.push_back(detail::wfock_record("f_11_trivial", 1, f11, to_string(f_log(1, 1))));
    for (auto kind : {StructureKind::gamma_plus, StructureKind::gamma_minus, StructureKind::g, StructureKind::G_plus,
                      StructureKind::G_minus}) {
        StructureFunction sf(structure_log(kind));
        bool ok = sf.is_rational() && StructureFunction::log_of_product(*sf.product_form()) == sf.log_coeff();
        out.push_back(detail::wfock_record("exp_log_consistency", 1, ok, to_string(sf.log_coeff())));
    }
    return out;
}

}  // namespace qtkern
