#pragma once

#include <json.hpp>

#include "qtkern/macdonald/cauchy.hpp"
#include "qtkern/macdonald/tableau_formula.hpp"
#include "qtkern/report.hpp"

namespace qtkern {

/// {basis, degree, entries: [{partition, coefficient}]}
inline nlohmann::json to_json(const SymFunc& f) {
    nlohmann::json j{{"basis", basis_name(f.basis)}, {"degree", f.degree}, {"entries", nlohmann::json::array()}};
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        j["entries"].push_back({{"partition", it->first.to_string()}, {"coefficient", to_string(it->second)}});
    return j;
}

inline SymFunc symfunc_from_json(const nlohmann::json& j) {
    SymFunc f{parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>(), {}};
    for (const auto& e : j.at("entries"))
        f.add(Partition::parse(e.at("partition").get<std::string>()), parse_ratfunc(e.at("coefficient").get<std::string>()));
    return f;
}

enum class BMethod { inner_product, factorized };

inline RatFunc b_norm(const MacdonaldContext& ctx, const Partition& lambda, BMethod method) {
    return method == BMethod::inner_product ? ctx.b(lambda) : b_factorized(lambda);
}

namespace detail {

inline CheckRecord degree_record(std::string check, int n, bool ok, std::string note = {}) {
    CheckRecord r{std::move(check)};
    r.witness["n"] = std::to_string(n);
    r.verdict = ok;
    r.value = ok ? "ok" : "mismatch";
    r.note = std::move(note);
    return r;
}

/// <f,g> for f, g already in the p basis.
inline RatFunc p_pairing(const DegreeData& d, const SymFunc& f, const SymFunc& g) {
    RatFunc s;
    for (const auto& [rho, c] : f.coeffs) {
        auto it = g.coeffs.find(rho);
        if (it != g.coeffs.end()) s += c * it->second * d.p_norm[d.index.at(rho)];
    }
    return s;
}

inline std::vector<SymFunc> P_in_p(const MacdonaldContext& ctx, const std::vector<Partition>& parts) {
    std::vector<SymFunc> out;
    for (const auto& l : parts) out.push_back(ctx.to_p(SymFunc::basis_element(Basis::P, l)));
    return out;
}

}  // namespace detail

/// P_lambda from Gram-Schmidt equals the tableau sum in m variables.
inline CheckRecord tableau_vs_gram(const MacdonaldContext& ctx, const Partition& lambda, int m) {
    CheckRecord r{"tableau_vs_gram_schmidt", lambda.to_string()};
    r.witness["m"] = std::to_string(m);
    r.verdict = tableau_expand(lambda, m) == restrict_to(ctx, ctx.P(lambda), m);
    r.value = r.verdict ? "equal" : "differ";
    return r;
}

/// <P_lambda, P_mu> = 0 for all lambda != mu of size n.
inline CheckRecord orthogonality_check(const MacdonaldContext& ctx, int n) {
    auto parts = partitions_of(n);
    auto P = detail::P_in_p(ctx, parts);
    const DegreeData& d = ctx.base(n);
    std::string bad;
    for (std::size_t i = 0; i < parts.size() && bad.empty(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!detail::p_pairing(d, P[i], P[j]).zero()) {
                bad = parts[i].to_string() + " vs " + parts[j].to_string();
                break;
            }
    return detail::degree_record("orthogonality", n, bad.empty(), bad);
}

/// m-coefficients of P_lambda are supported on mu <= lambda, with leading 1.
inline CheckRecord triangularity_check(const MacdonaldContext& ctx, int n) {
    std::string bad;
    for (const auto& lambda : partitions_of(n)) {
        SymFunc p = ctx.P(lambda);
        if (p.coefficient(lambda) != RatFunc(1)) bad = lambda.to_string() + " leading coefficient";
        for (const auto& [mu, c] : p.coeffs)
            if (!dominance_leq(mu, lambda)) bad = lambda.to_string() + " has m" + mu.to_string();
        if (!bad.empty()) break;
    }
    return detail::degree_record("triangularity", n, bad.empty(), bad);
}

/// <P_lambda, Q_mu> = delta, with Q_mu = b_mu P_mu and b_mu in hook form.
inline CheckRecord duality_check(const MacdonaldContext& ctx, int n) {
    auto parts = partitions_of(n);
    auto P = detail::P_in_p(ctx, parts);
    const DegreeData& d = ctx.base(n);
    std::string bad;
    for (std::size_t i = 0; i < parts.size() && bad.empty(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            RatFunc v = detail::p_pairing(d, P[i], P[j]);
            if (!v.zero()) v *= b_factorized(parts[j]);
            if (v != RatFunc(i == j ? 1 : 0)) {
                bad = parts[i].to_string() + " vs " + parts[j].to_string();
                break;
            }
        }
    return detail::degree_record("duality", n, bad.empty(), bad);
}

/// The two linear extensions of dominance give the same P table.
inline CheckRecord gram_order_check(const MacdonaldContext& ctx, int n) {
    const DegreeData& d = ctx.base(n);
    bool ok = gram_schmidt(d, GramOrder::reverse_lex) == gram_schmidt(d, GramOrder::square_sum);
    return detail::degree_record("gram_order_independence", n, ok);
}

/// Conversion to and from the p basis are mutually inverse for every basis,
/// so any round trip f -> g -> f is the identity.
inline CheckRecord round_trip_check(const MacdonaldContext& ctx, int n) {
    auto first_failure = [&]() -> std::string {
        for (Basis b : {Basis::m, Basis::e, Basis::g, Basis::P, Basis::Q})
            for (const auto& lambda : partitions_of(n)) {
                SymFunc f = SymFunc::basis_element(b, lambda);
                if (!(ctx.convert(ctx.to_p(f), b) == f)) return basis_name(b) + lambda.to_string() + " via p";
                SymFunc pl = SymFunc::basis_element(Basis::p, lambda);
                if (!(ctx.to_p(ctx.convert(pl, b)) == pl)) return "p" + lambda.to_string() + " via " + basis_name(b);
            }
        return {};
    };
    std::string bad = first_failure();
    return detail::degree_record("round_trip", n, bad.empty(), bad);
}

/// m_lambda = sum_mu c^{g->P}_{mu,lambda} Q_mu, where P_mu = sum c^{g->P}_{mu,nu} g_nu.
inline CheckRecord qtom_check(const MacdonaldContext& ctx, int n) {
    std::string bad;
    auto parts = partitions_of(n);
    std::map<Partition, SymFunc> cg;
    for (const auto& mu : parts) cg.emplace(mu, ctx.P_in(mu, Basis::g));
    for (const auto& lambda : parts) {
        SymFunc rhs{Basis::Q, n, {}};
        for (const auto& mu : parts) rhs.add(mu, cg.at(mu).coefficient(lambda));
        if (!(ctx.convert(rhs, Basis::m) == SymFunc::basis_element(Basis::m, lambda))) {
            bad = lambda.to_string();
            break;
        }
    }
    return detail::degree_record("m_in_Q", n, bad.empty(), bad);
}

/// b from the inner product against the factorized hook product.
inline CheckRecord b_methods_check(const MacdonaldContext& ctx, const Partition& lambda) {
    CheckRecord r{"b_norm_methods", lambda.to_string()};
    RatFunc a = b_norm(ctx, lambda, BMethod::inner_product), f = b_norm(ctx, lambda, BMethod::factorized);
    r.verdict = a == f;
    r.value = to_string(a);
    if (!r.verdict) r.note = "factorized " + to_string(f);
    return r;
}

inline CheckRecord psi_vanishing_record(const Partition& lambda, int m) {
    CheckRecord r{"psi_vanishing", lambda.to_string()};
    r.witness["m"] = std::to_string(m);
    auto bad = psi_vanishing_check(lambda, m);
    r.verdict = bad.empty();
    r.value = std::to_string(bad.size()) + " nonzero";
    if (!bad.empty()) {
        r.witness["T"] = bad.front().filling.theta_string();
        r.note = "psi_T = " + to_string(bad.front().value);
    }
    return r;
}

inline CheckRecord cauchy_record(const MacdonaldContext& ctx, int degree, int mx, int my) {
    CheckRecord r{"cauchy_kernel"};
    r.witness["degree"] = std::to_string(degree);
    r.witness["mx"] = std::to_string(mx);
    r.witness["my"] = std::to_string(my);
    CauchyResult c = cauchy_check(ctx, degree, mx, my);
    r.verdict = c.ok();
    r.value = std::string("m/g ") + (c.monomial_dual ? "ok" : "fail") + ", P/Q " + (c.macdonald_dual ? "ok" : "fail");
    return r;
}

}  // namespace qtkern
