#pragma once

#include <array>
#include <functional>
#include <numeric>

#include "qtkern/macdonald/context.hpp"
#include "qtkern/shuffle/sampling.hpp"

namespace qtkern {

/// Which parameter the epsilon basis uses: eps(z;q) or eps(z;t).
enum class EpsilonParameter { q, t };

namespace detail {

/// eps_mu = eps_{mu_1} * eps_{mu_2} * ... on the points of `tab`. The
/// symmetrization reduces to a sum over labelings of the points by block,
/// each labeling standing for prod mu_k! permutations.
inline RatFunc epsilon_product(const std::vector<int>& mu, PairTable& tab, bool use_q) {
    const std::size_t n = tab.size();
    std::vector<std::size_t> label;
    for (std::size_t k = 0; k < mu.size(); ++k) label.insert(label.end(), static_cast<std::size_t>(mu[k]), k);
    if (label.size() != n) throw DomainError("epsilon_product: size mismatch");
    if (mu.size() <= 1) {
        RatFunc r(1);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) r *= tab.epsilon(a, b, use_q);
        return r;
    }
    RatFunc sum;
    long count = 0;
    do {
        RatFunc term(1);
        for (std::size_t a = 0; a < n && !term.zero(); ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (label[a] == label[b]) {
                    if (a < b) term *= tab.epsilon(a, b, use_q);
                } else if (label[a] < label[b]) {
                    term *= tab.omega(a, b);
                }
            }
        sum += term;
        ++count;
    } while (std::next_permutation(label.begin(), label.end()));
    return sum / count;
}

inline Scalar factorial_product(const Partition& mu) {
    Scalar r = 1;
    for (int part : mu.parts()) r *= Scalar(factorial(part));
    return r;
}

}  // namespace detail

/// Element of A_n as a combination of eps_mu(z;p), mu ⊢ n.
struct AElement {
    int arity = 0;
    EpsilonParameter basis = EpsilonParameter::t;
    std::map<Partition, RatFunc> expansion;

    static AElement constant(const RatFunc& c) { return {0, EpsilonParameter::t, {{Partition{}, c}}}; }

    static AElement epsilon(const Partition& mu, EpsilonParameter p) { return {mu.size(), p, {{mu, RatFunc(1)}}}; }

    AElement scaled(const RatFunc& c) const {
        AElement r = *this;
        for (auto& [mu, v] : r.expansion) v *= c;
        return r;
    }

    RatFunc evaluate(const Points& z, const Parameters& par) const {
        PairTable tab(z, par);
        return evaluate(tab);
    }

    RatFunc evaluate(PairTable& tab) const {
        if (static_cast<int>(tab.size()) != arity)
            throw DomainError("AElement of arity " + std::to_string(arity) + " evaluated at " +
                              std::to_string(tab.size()) + " points");
        RatFunc sum;
        for (const auto& [mu, c] : expansion) {
            RatFunc cv = tab.parameters().at(c);
            if (cv.zero()) continue;
            sum += cv * detail::epsilon_product(mu.parts(), tab, basis == EpsilonParameter::q);
        }
        return sum;
    }
};

inline AElement operator+(AElement a, const AElement& b) {
    if (a.arity != b.arity || (a.basis != b.basis && !a.expansion.empty() && !b.expansion.empty()))
        throw DomainError("adding AElements of different arity or epsilon basis");
    if (a.expansion.empty()) a.basis = b.basis;
    for (const auto& [mu, c] : b.expansion) {
        auto [it, fresh] = a.expansion.try_emplace(mu, c);
        if (!fresh) it->second += c;
    }
    std::erase_if(a.expansion, [](const auto& kv) { return kv.second.zero(); });
    return a;
}

using Evaluator = std::function<RatFunc(const Points&)>;

inline Evaluator evaluator(const AElement& f, const Parameters& par) {
    return [f, par](const Points& z) { return f.evaluate(z, par); };
}

namespace detail {

inline std::string describe_subset(const std::vector<bool>& chosen) {
    std::string s = "{";
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i]) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    return s + "}";
}

}  // namespace detail

/// (f*g)(z) for symmetric f of arity m and g of arity n. Permutations that
/// send the same set of points into f's slots give equal summands, so the
/// (m+n)! terms are grouped by that set.
inline RatFunc star_eval(const Evaluator& f, int m, const Evaluator& g, int n, const Points& z,
                         const Parameters& par) {
    if (static_cast<int>(z.size()) != m + n) throw DomainError("star_eval: wrong number of points");
    std::vector<bool> chosen(z.size(), false);
    std::fill(chosen.begin(), chosen.begin() + m, true);
    RatFunc sum;
    long count = 0;
    // prev_permutation from the sorted-descending start visits every subset
    do {
        Points a, b;
        std::vector<std::size_t> ia, ib;
        for (std::size_t i = 0; i < z.size(); ++i) {
            (chosen[i] ? a : b).push_back(z[i]);
            (chosen[i] ? ia : ib).push_back(i);
        }
        try {
            RatFunc term = f(a) * g(b);
            for (std::size_t x : ia)
                for (std::size_t y : ib) term *= omega_eval(z[x], z[y], par);
            sum += term;
        } catch (const PoleError& e) {
            throw PoleError(std::string(e.what()) + " in the summand with points " +
                            detail::describe_subset(chosen) + " in the first factor");
        }
        ++count;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return sum / count;
}

inline RatFunc star_eval(const AElement& f, const AElement& g, const Points& z, const Parameters& par) {
    return star_eval(evaluator(f, par), f.arity, evaluator(g, par), g.arity, z, par);
}

using ParametricEvaluator = std::function<RatFunc(const Points&, const Parameters&)>;

/// Both wheel conditions (q1 = q^{-1}, q2 = t) at `samples` random points and
/// parameters.
inline bool wheel_check(const ParametricEvaluator& f, int arity, int samples, std::uint64_t seed = 1) {
    if (arity < 3) return true;
    Sampler s(seed);
    for (int k = 0; k < samples; ++k) {
        Parameters par = s.parameters();
        Points z = s.points(static_cast<std::size_t>(arity) - 2);
        const RatFunc x1 = z[0];
        Points rest(z.begin() + 1, z.end());
        for (const RatFunc& first : {par.q1(), par.q2()}) {
            Points w{x1, first * x1, par.q1() * par.q2() * x1};
            w.insert(w.end(), rest.begin(), rest.end());
            if (!f(w, par).zero()) return false;
        }
    }
    return true;
}

inline bool wheel_check(const AElement& f, int samples, std::uint64_t seed = 1) {
    return wheel_check([&f](const Points& z, const Parameters& par) { return f.evaluate(z, par); }, f.arity, samples,
                       seed);
}

enum class FRoute { via_e, via_g };

/// F_lambda as a combination of eps_mu(z;q) (via_e) or eps_mu(z;t) (via_g).
inline AElement F_lambda(const MacdonaldContext& ctx, const Partition& lambda, FRoute route) {
    const int n = lambda.size();
    AElement f{n, route == FRoute::via_e ? EpsilonParameter::q : EpsilonParameter::t, {}};
    RatFunc pre;
    SymFunc c;
    if (route == FRoute::via_e) {
        pre = t_pow(-n) / (RatFunc(1) - t_pow(-1)).pow(n);
        c = ctx.P_in(lambda, Basis::e);
    } else {
        pre = RatFunc(n % 2 ? -1 : 1) / (RatFunc(1) - q_pow(1)).pow(n);
        c = ctx.P_in(lambda, Basis::g);
    }
    // the n! of the prefactor cancels against |mu|! = n
    for (const auto& [mu, v] : c.coeffs) f.expansion.emplace(mu, pre * v / RatFunc(detail::factorial_product(mu)));
    return f;
}

/// iota(e_lambda) = t^{-n}/(1-t^{-1})^n / prod lambda_i! * eps_lambda(z;q).
inline AElement iota_e(const Partition& lambda) {
    const int n = lambda.size();
    RatFunc c = t_pow(-n) / (RatFunc(1) - t_pow(-1)).pow(n) / RatFunc(detail::factorial_product(lambda));
    return AElement::epsilon(lambda, EpsilonParameter::q).scaled(c);
}

/// The stated image (-1)^n/(1-q)^n / prod lambda_i! * eps_lambda(z;t).
inline AElement iota_g_stated(const Partition& lambda) {
    const int n = lambda.size();
    RatFunc c = RatFunc(n % 2 ? -1 : 1) / (RatFunc(1) - q_pow(1)).pow(n) / RatFunc(detail::factorial_product(lambda));
    return AElement::epsilon(lambda, EpsilonParameter::t).scaled(c);
}

/// iota applied through the e-expansion.
inline AElement iota(const MacdonaldContext& ctx, const SymFunc& f) {
    SymFunc fe = ctx.convert(f, Basis::e);
    AElement out{f.degree, EpsilonParameter::q, {}};
    for (const auto& [mu, c] : fe.coeffs) out = out + iota_e(mu).scaled(c);
    return out;
}

}  // namespace qtkern
