#pragma once

#include "qtkern/shuffle/specialize.hpp"

namespace qtkern {

namespace detail {

inline std::string join_points(const Points& z) {
    std::string s;
    for (const auto& v : z) s += (s.empty() ? "" : ",") + to_string(v);
    return s;
}

}  // namespace detail

/// gamma_sum = eps_sum = QF_sum with q,t symbolic, at `points` random (x,z).
inline CheckRecord kernel_triple_check(const MacdonaldContext& ctx, int n, int m, int points, std::uint64_t seed) {
    CheckRecord r{"kernel_triple"};
    r.seed = seed;
    r.witness["n"] = std::to_string(n);
    r.witness["m"] = std::to_string(m);
    r.witness["points"] = std::to_string(points);
    Sampler s(seed);
    r.verdict = true;
    for (int k = 0; k < points && r.verdict; ++k) {
        Points x = s.points(static_cast<std::size_t>(m)), z = s.points(static_cast<std::size_t>(n));
        RatFunc a = kernel_K(ctx, n, KernelForm::gamma_sum, x, z);
        RatFunc b = kernel_K(ctx, n, KernelForm::eps_sum, x, z);
        RatFunc c = kernel_K(ctx, n, KernelForm::QF_sum, x, z);
        r.verdict = a == b && b == c;
        if (k == 0) r.value = to_string(a);
        if (!r.verdict) {
            r.witness["x"] = detail::join_points(x);
            r.witness["z"] = detail::join_points(z);
            r.note = "gamma_sum " + to_string(a) + ", eps_sum " + to_string(b) + ", QF_sum " + to_string(c);
        }
    }
    return r;
}

/// F_lambda via e equals F_lambda via g at random parameters and points.
inline CheckRecord F_routes_check(const MacdonaldContext& ctx, const Partition& lambda, int points,
                                  std::uint64_t seed) {
    CheckRecord r{"F_routes_agree", lambda.to_string()};
    r.seed = seed;
    Sampler s(seed);
    AElement fe = F_lambda(ctx, lambda, FRoute::via_e), fg = F_lambda(ctx, lambda, FRoute::via_g);
    r.verdict = true;
    for (int k = 0; k < points && r.verdict; ++k) {
        Parameters par = s.parameters();
        Points z = s.points(static_cast<std::size_t>(lambda.size()));
        PairTable tab(z, par);
        RatFunc a = fe.evaluate(tab), b = fg.evaluate(tab);
        r.verdict = a == b;
        if (k == 0) r.value = to_string(a);
        if (!r.verdict) {
            r.witness["q"] = to_string(par.q);
            r.witness["t"] = to_string(par.t);
            r.witness["z"] = detail::join_points(z);
            r.note = "via_e " + to_string(a) + ", via_g " + to_string(b);
        }
    }
    return r;
}

inline CheckRecord wheel_record(const std::string& what, const AElement& f, int samples, std::uint64_t seed) {
    CheckRecord r{"wheel_condition", what};
    r.seed = seed;
    r.witness["samples"] = std::to_string(samples);
    r.verdict = wheel_check(f, samples, seed);
    r.value = r.verdict ? "vanishes" : "nonzero";
    return r;
}

/// iota(P_lambda) = F_lambda and iota(g_lambda) equal to its stated eps(z;t) multiple.
inline std::vector<CheckRecord> iota_checks(const MacdonaldContext& ctx, const Partition& lambda, std::uint64_t seed) {
    Sampler s(seed);
    Parameters par = s.parameters();
    Points z = s.points(static_cast<std::size_t>(lambda.size()));
    PairTable tab(z, par);
    auto record = [&](const char* name, const RatFunc& a, const RatFunc& b) {
        CheckRecord r{name, lambda.to_string()};
        r.seed = seed;
        r.verdict = a == b;
        r.value = to_string(a);
        if (!r.verdict) {
            r.witness["z"] = detail::join_points(z);
            r.note = "expected " + to_string(b);
        }
        return r;
    };
    return {record("iota_P_is_F", iota(ctx, SymFunc::basis_element(Basis::P, lambda)).evaluate(tab),
                   F_lambda(ctx, lambda, FRoute::via_e).evaluate(tab)),
            record("iota_g", iota(ctx, SymFunc::basis_element(Basis::g, lambda)).evaluate(tab),
                   iota_g_stated(lambda).evaluate(tab))};
}

/// f*g = g*f and (f*g)*h = f*(g*h) for eps elements of the given arities.
inline std::vector<CheckRecord> star_checks(int a, int b, int c, std::uint64_t seed) {
    Sampler s(seed);
    Parameters par = s.parameters();
    Points z = s.points(static_cast<std::size_t>(a + b + c));
    AElement f = AElement::epsilon(Partition{a}, EpsilonParameter::t);
    AElement g = AElement::epsilon(Partition{b}, EpsilonParameter::q);
    AElement h = AElement::epsilon(Partition{c}, EpsilonParameter::t);
    Evaluator F = evaluator(f, par), G = evaluator(g, par), H = evaluator(h, par);
    Evaluator FG = [&](const Points& p) { return star_eval(F, a, G, b, p, par); };
    Evaluator GH = [&](const Points& p) { return star_eval(G, b, H, c, p, par); };
    Points zab(z.begin(), z.begin() + a + b);
    std::string shape = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);

    CheckRecord comm{"star_commutative", shape};
    comm.seed = seed;
    RatFunc x = FG(zab), y = star_eval(G, b, F, a, zab, par);
    comm.verdict = x == y;
    comm.value = to_string(x);

    CheckRecord assoc{"star_associative", shape};
    assoc.seed = seed;
    RatFunc u = star_eval(FG, a + b, H, c, z, par), v = star_eval(F, a, GH, b + c, z, par);
    assoc.verdict = u == v;
    assoc.value = to_string(u);
    for (CheckRecord* r : {&comm, &assoc})
        if (!r->verdict) r->witness["z"] = detail::join_points(z);
    return {comm, assoc};
}

}  // namespace qtkern
