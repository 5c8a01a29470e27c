#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtkern/wfock/verify.hpp"

namespace qtkern {

enum class QuadraticRelation { Att, Btt_star, TT_1i, TT_mm };

inline std::string to_string(QuadraticRelation r) {
    switch (r) {
        case QuadraticRelation::Att: return "Att";
        case QuadraticRelation::Btt_star: return "Btt*";
        case QuadraticRelation::TT_1i: return "TT_1i";
        case QuadraticRelation::TT_mm: return "TT_mm";
    }
    return "?";
}

/// displayed: the relations as written; corrected: f_{i,m} in place of
/// f_{1,m} for TT_1i and a factor (y_1...y_m)^2 on the right of TT_mm.
enum class RelationForm { displayed, corrected };

/// coefficient * L(z) R(w)
struct QuadraticTerm {
    RatFunc coefficient;
    VertexOperator left, right;
};

/// sum_terms [F1(w/z) L(z)R(w) - F2(z/w) R(w)L(z)] against
/// sum_poles K_a delta(x/a) (operators in z), with x = w/z and a = p^{e/4}.
struct QuadraticSetup {
    std::vector<QuadraticTerm> terms;
    ModeCoeff first_log;
    ModeCoeff second_log;  // includes any shift of its argument
    std::map<int, std::pair<RatFunc, OperatorSum>> expected;
};

struct QuadraticReport {
    std::string relation;
    int m = 0;
    int i = 0;
    std::vector<std::string> poles;
    std::vector<std::string> residues;
    bool single_function = true;
    bool poles_match = true;
    bool tail_match = true;
    std::string note;

    bool pass() const { return single_function && poles_match && tail_match; }

    CheckRecord record() const {
        CheckRecord r;
        r.check = "quadratic_" + relation;
        r.witness["m"] = std::to_string(m);
        if (i) r.witness["i"] = std::to_string(i);
        std::string ps, rs;
        for (const auto& p : poles) ps += (ps.empty() ? "" : ", ") + p;
        for (const auto& p : residues) rs += (rs.empty() ? "" : "; ") + p;
        r.witness["poles"] = ps;
        r.witness["single_function"] = single_function ? "true" : "false";
        r.witness["tail_match"] = tail_match ? "true" : "false";
        r.verdict = pass();
        r.value = rs;
        r.note = note;
        return r;
    }
};

namespace detail {

/// Normal ordering scalar of V1(p^{e1/4} z) V2(p^{e2/4} z) ... and the
/// merged operator.
inline std::pair<RatFunc, VertexOperator> ordered_at(const std::vector<std::pair<VertexOperator, int>>& ops) {
    RatFunc scalar(1);
    VertexOperator merged = VertexOperator::identity(ops.at(0).first.level());
    for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
            StructureFunction s(contraction_log(ops[a].first, ops[b].first));
            if (s.is_trivial()) continue;
            scalar *= s.rational(p_quarter_value(ops[b].second - ops[a].second));
        }
        merged = normal_product(merged, ops[a].first.shifted(ops[a].second));
    }
    return {scalar, merged};
}

/// t^{(2)}(z) = alpha(pz) alpha(z) x+(pz) x+(z) beta(pz) beta(z) in the
/// representation, x+ -> sum y_i Lambda~_i.
inline OperatorSum t_two(const LevelRep& r) {
    OperatorSum out;
    for (int i = 1; i <= r.m; ++i)
        for (int j = 1; j <= r.m; ++j) {
            const auto& li = r.Lambda_tilde[static_cast<std::size_t>(i - 1)];
            const auto& lj = r.Lambda_tilde[static_cast<std::size_t>(j - 1)];
            auto [s, v] = ordered_at({{r.alpha, 4}, {r.alpha, 0}, {li, 4}, {lj, 0}, {r.beta, 4}, {r.beta, 0}});
            if (!s.zero()) out.push_back({s * y_var(i) * y_var(j), v});
        }
    return out;
}

inline QuadraticSetup quadratic_setup(const LevelRep& r, QuadraticRelation rel, int i,
                                      RelationForm form = RelationForm::displayed) {
    const bool fixed = form == RelationForm::corrected;
    const int m = r.m;
    QuadraticSetup s;
    RatFunc K = (RatFunc(1) - q_pow(1)) * (RatFunc(1) - t_pow(-1)) / (RatFunc(1) - q_pow(1) / t_pow(1));
    RatFunc K_star = (RatFunc(1) - q_pow(-1)) * (RatFunc(1) - t_pow(1)) / (RatFunc(1) - t_pow(1) / q_pow(1));
    auto pairs = [&](const OperatorSum& a, const OperatorSum& b) {
        for (const auto& u : a)
            for (const auto& v : b) s.terms.push_back({u.coefficient * v.coefficient, u.op, v.op});
    };
    switch (rel) {
        case QuadraticRelation::Att: {
            pairs(r.T(1), r.T(1));
            s.first_log = s.second_log = f_log(1, m);
            OperatorSum t2 = t_two(r);
            s.expected[4] = {K, t2};
            s.expected[-4] = {-K, shifted(t2, -4)};
            break;
        }
        case QuadraticRelation::Btt_star: {
            pairs(r.T(1), r.T_star(1));
            s.first_log = B_log(gamma_mode(m));
            // B(gamma^2 p^2 z/w), gamma^2 = p^{-m}
            s.second_log = B_log(gamma_mode(m)) * p_mode(2 - m);
            OperatorSum one{{RatFunc(1), VertexOperator::identity(m)}};
            s.expected[4] = {K, one};
            s.expected[4 * (1 - m)] = {-K, one};
            break;
        }
        case QuadraticRelation::TT_1i: {
            pairs(r.T(1), r.T(i));
            s.first_log = f_log(fixed ? i : 1, m);
            s.second_log = s.first_log * p_mode(1 - i);
            OperatorSum next = r.T(i + 1);
            s.expected[4] = {K, next};
            s.expected[-4 * i] = {-K, shifted(next, -4 * i)};
            break;
        }
        case QuadraticRelation::TT_mm: {
            pairs(r.T(m - 1), r.T(m - 1));
            s.first_log = s.second_log = f_log(1, m);
            OperatorSum next = r.T_star(2);
            RatFunc y2(1);
            if (fixed)
                for (int j = 1; j <= m; ++j) y2 *= y_var(j) * y_var(j);
            s.expected[-4] = {K_star * y2, next};
            s.expected[4] = {-K_star * y2, shifted(next, 4)};
            break;
        }
    }
    return s;
}

/// Accumulate c * op into a list keyed by slot coefficients.
inline void accumulate(OperatorSum& acc, const RatFunc& c, const VertexOperator& op) {
    RatFunc coef = c * op.prefactor();
    VertexOperator bare(op.slots());
    for (auto& t : acc)
        if (t.op.same_modes(bare)) {
            t.coefficient += coef;
            return;
        }
    acc.push_back({coef, bare});
}

}  // namespace detail

/// Residue-calculus check of one quadratic relation in the level m
/// representation.
inline QuadraticReport verify_quadratic(int m, QuadraticRelation rel, int i = 0,
                                        RelationForm form = RelationForm::displayed) {
    detail::check_level_range(m, 2, 3, "verify_quadratic");
    if (rel == QuadraticRelation::TT_1i && (i < 1 || i > m - 1))
        throw DomainError("TT_1i needs 1 <= i <= m-1, got " + std::to_string(i));
    LevelRep r = build_level_m(m);
    QuadraticSetup setup = detail::quadratic_setup(r, rel, i, form);
    QuadraticReport rep;
    rep.relation = to_string(rel) + (form == RelationForm::corrected ? "_corrected" : "");
    rep.m = m;
    rep.i = rel == QuadraticRelation::TT_1i ? i : 0;
    const Symbol xs = detail::x_symbol();
    const RatFunc x(xs);
    std::map<int, OperatorSum> got;
    for (const auto& term : setup.terms) {
        StructureFunction s1(setup.first_log + contraction_log(term.left, term.right));
        StructureFunction s2(setup.second_log + contraction_log(term.right, term.left));
        if (!s1.is_rational() || !s2.is_rational()) {
            rep.single_function = false;
            rep.note = "non-rational scalar: " + to_string(s1.log_coeff());
            return rep;
        }
        RatFunc rho = s1.rational(x);
        if (s2.rational(x.inverse()) != rho) {
            rep.single_function = false;
            rep.note = "orderings differ: " + to_string(rho) + " vs " + to_string(s2.rational(x.inverse()));
            return rep;
        }
        for (const auto& [a, c] : delta_decompose(rho, xs, 4).terms) {
            auto e = detail::p_quarter_exponent(a);
            if (!e) {
                rep.poles_match = false;
                rep.note = "pole off the p-lattice at " + to_string(a);
                return rep;
            }
            detail::accumulate(got[*e], term.coefficient * c, normal_product(term.left, term.right.shifted(*e)));
        }
    }
    // drop tails whose residues cancel, then compare pole sets and tails
    for (auto it = got.begin(); it != got.end();) {
        std::erase_if(it->second, [](const OperatorTerm& t) { return t.coefficient.zero(); });
        it = it->second.empty() ? got.erase(it) : std::next(it);
    }
    for (const auto& [e, terms] : got) rep.poles.push_back(detail::p_power_string(e));
    for (const auto& [e, want] : setup.expected) {
        if (!got.count(e)) rep.poles_match = false;
        rep.residues.push_back(detail::p_power_string(e) + ": " + to_string(want.first));
    }
    for (const auto& [e, terms] : got)
        if (!setup.expected.count(e)) rep.poles_match = false;
    if (!rep.poles_match) {
        rep.note = "pole set differs from the displayed deltas";
        return rep;
    }
    for (const auto& [e, want] : setup.expected) {
        OperatorSum diff = got[e];
        for (const auto& t : want.second) detail::accumulate(diff, -want.first * t.coefficient, t.op);
        for (const auto& t : diff)
            if (!t.coefficient.zero()) {
                rep.tail_match = false;
                rep.note = "residue mismatch at " + detail::p_power_string(e) + " on " + to_string(t.op) + ": " +
                           to_string(t.coefficient);
                return rep;
            }
    }
    return rep;
}

/// Second witness for TT_1i: Laurent coefficients x^k, k in [-2, 3], of both
/// sides paired with <0| and <0| a_{1,(s)}, from the two expansions of each
/// ordering directly (no residues).
inline CheckRecord verify_quadratic_series(int m, int i, RelationForm form = RelationForm::displayed) {
    LevelRep r = build_level_m(m);
    QuadraticSetup setup = detail::quadratic_setup(r, QuadraticRelation::TT_1i, i, form);
    const std::string name =
        std::string("quadratic_TT_1i_series") + (form == RelationForm::corrected ? "_corrected" : "");
    const Symbol xs = detail::x_symbol();
    const RatFunc x(xs);
    constexpr int lo = -2, hi = 3;
    // component 0: vacuum value; component s+1: first mode of slot s
    std::vector<std::vector<RatFunc>> lhs(static_cast<std::size_t>(m + 1), std::vector<RatFunc>(hi - lo + 1));
    auto rhs = lhs;
    ModeCoeff br = at_first_mode(heisenberg_bracket());
    for (const auto& term : setup.terms) {
        StructureFunction s1(setup.first_log + contraction_log(term.left, term.right));
        StructureFunction s2(setup.second_log + contraction_log(term.right, term.left));
        if (!s1.is_rational() || !s2.is_rational()) {
            auto rec = detail::wfock_record(name, m, false, "not rational",
                                            "prefactor times contraction is not a rational function of w/z");
            rec.witness["i"] = std::to_string(i);
            return rec;
        }
        auto e0 = series_expand(s1.rational(x), xs, Center::zero, hi + 1);
        auto e1 = series_expand(s2.rational(x), xs, Center::zero, -lo + 2);  // in z/w
        auto coeff = [&](int k) { return e0.coefficient(k) - e1.coefficient(-k); };
        RatFunc c = term.coefficient * term.left.prefactor() * term.right.prefactor();
        for (int k = lo; k <= hi; ++k) {
            auto idx = static_cast<std::size_t>(k - lo);
            lhs[0][idx] += c * coeff(k);
            for (int sl = 0; sl < m; ++sl)
                lhs[static_cast<std::size_t>(sl + 1)][idx] +=
                    c * br *
                    (at_first_mode(term.left.slot(sl).creation) * coeff(k) +
                     at_first_mode(term.right.slot(sl).creation) * coeff(k - 1));
        }
    }
    // K [delta(x/p) T(z) - delta(x p^i) T(w)], w = xz
    for (const auto& [e, want] : setup.expected) {
        RatFunc a = detail::p_quarter_value(e);
        for (const auto& t : want.second) {
            RatFunc c = want.first * t.coefficient * t.op.prefactor();
            for (int k = lo; k <= hi; ++k) {
                auto idx = static_cast<std::size_t>(k - lo);
                rhs[0][idx] += c * a.pow(-k);
                for (int sl = 0; sl < m; ++sl)
                    rhs[static_cast<std::size_t>(sl + 1)][idx] +=
                        c * br * at_first_mode(t.op.slot(sl).creation) * a.pow(-k);
            }
        }
    }
    bool ok = lhs == rhs;
    auto rec = detail::wfock_record(name, m, ok, ok ? "6 coefficients agree" : "mismatch");
    rec.witness["i"] = std::to_string(i);
    return rec;
}

}  // namespace qtkern
