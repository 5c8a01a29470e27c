#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qtkern/macdonald/symfunc.hpp"

namespace qtkern {

using Matrix = std::vector<std::vector<RatFunc>>;

namespace detail {

/// Coefficient of x^mu in p_lambda: number of ways to distribute the parts
/// of lambda over the positions of mu with matching sums.
inline long p_to_m_coefficient(const Partition& lambda, const Partition& mu) {
    std::vector<int> room(mu.parts());
    const auto& parts = lambda.parts();
    auto rec = [&](auto&& self, std::size_t k) -> long {
        if (k == parts.size()) {
            for (int r : room)
                if (r) return 0;
            return 1;
        }
        long total = 0;
        for (auto& r : room) {
            if (r < parts[k]) continue;
            r -= parts[k];
            total += self(self, k + 1);
            r += parts[k];
        }
        return total;
    };
    return rec(rec, 0);
}

/// Exact inverse by Gauss-Jordan elimination.
inline Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].zero()) ++piv;
        if (piv == n) throw InternalConsistency("singular transition matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        RatFunc d = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[c][j].zero()) a[c][j] *= d;
            if (!inv[c][j].zero()) inv[c][j] *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].zero()) continue;
            RatFunc f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[c][j].zero()) a[r][j] -= f * a[c][j];
                if (!inv[c][j].zero()) inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

using Expansion = std::map<Partition, RatFunc>;

inline Expansion multiply(const Expansion& a, const Expansion& b) {
    Expansion r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            RatFunc c = ca * cb;
            auto [it, fresh] = r.try_emplace(la + lb, c);
            if (!fresh) it->second += c;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second.zero(); });
    return r;
}

/// Compositions of n (ordered tuples of positive integers).
inline void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            visit(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            self(self, rest - k);
            cur.pop_back();
        }
    };
    rec(rec, n);
}

/// [y^n] log(1 + sum_k u_k y^k), as a combination of products u_lambda.
inline Expansion log_coefficient(int n) {
    Expansion r;
    for_each_composition(n, [&](const std::vector<int>& c) {
        std::vector<int> v = c;
        std::sort(v.begin(), v.end(), std::greater<>());
        auto len = static_cast<long>(c.size());
        Scalar coef(len % 2 ? 1 : -1, len);
        coef.canonicalize();
        auto [it, fresh] = r.try_emplace(Partition(v), RatFunc(coef));
        if (!fresh) it->second += RatFunc(coef);
    });
    std::erase_if(r, [](const auto& kv) { return kv.second.zero(); });
    return r;
}

}  // namespace detail

/// Transition data for one degree n. Index order is partitions_of(n).
struct DegreeData {
    int n = 0;
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    Matrix p_to_m, m_to_p;   // rows: source partition, columns: target
    Matrix e_to_p, g_to_p;
    Matrix p_to_e, p_to_g;
    std::vector<RatFunc> p_norm;   // <p_rho, p_rho>
    Matrix m_gram;                 // <m_lambda, m_mu>

    // Macdonald data, filled on demand
    bool has_macdonald = false;
    Matrix P_to_m;            // P_lambda = sum_mu P_to_m[lambda][mu] m_mu
    Matrix m_to_P;
    std::vector<RatFunc> b;   // b_lambda = <P,P>^{-1}
};

namespace detail {

inline RatFunc p_norm(const Partition& rho) {
    RatFunc r(Scalar(z_factor(rho)));
    for (int k : rho.parts()) r *= (RatFunc(1) - q_pow(k)) / (RatFunc(1) - t_pow(k));
    return r;
}

inline RatFunc one_minus_t_over_one_minus_q(int k) { return (RatFunc(1) - t_pow(k)) / (RatFunc(1) - q_pow(k)); }

/// e_k and g_k in the power-sum basis.
inline Expansion e_single(int k) {
    Expansion r;
    for (const auto& rho : partitions_of(k)) {
        Scalar c(((k - rho.length()) % 2) ? -1 : 1, z_factor(rho));
        c.canonicalize();
        r.emplace(rho, RatFunc(c));
    }
    return r;
}

inline Expansion g_single(int k) {
    Expansion r;
    for (const auto& rho : partitions_of(k)) {
        RatFunc c(Scalar(1, z_factor(rho)));
        for (int part : rho.parts()) c *= one_minus_t_over_one_minus_q(part);
        r.emplace(rho, c);
    }
    return r;
}

/// p_k in the e basis (sign = true) or the g basis.
inline Expansion p_single(int k, bool elementary) {
    Expansion r = log_coefficient(k);
    RatFunc factor = elementary ? RatFunc(Scalar((k % 2) ? k : -k))
                                : RatFunc(Scalar(k)) / one_minus_t_over_one_minus_q(k);
    for (auto& [l, c] : r) c *= factor;
    return r;
}

inline Expansion product_expansion(const Partition& lambda, const std::function<Expansion(int)>& single) {
    Expansion r{{Partition{}, RatFunc(1)}};
    for (int k : lambda.parts()) r = multiply(r, single(k));
    return r;
}

}  // namespace detail

/// Order in which Gram-Schmidt visits partitions. Both are linear
/// extensions of dominance (smallest first).
enum class GramOrder { reverse_lex, square_sum };

inline std::vector<Partition> linear_extension(int n, GramOrder order) {
    auto ps = partitions_of(n);
    std::reverse(ps.begin(), ps.end());  // (1^n) first
    if (order == GramOrder::square_sum) {
        auto key = [](const Partition& l) {
            long s = 0;
            for (int x : l.parts()) s += static_cast<long>(x) * x;
            return s;
        };
        std::stable_sort(ps.begin(), ps.end(), [&](const Partition& a, const Partition& b) {
            long ka = key(a), kb = key(b);
            if (ka != kb) return ka < kb;
            return b < a;  // opposite tie-break to reverse_lex
        });
    }
    return ps;
}

inline DegreeData build_degree_data(int n) {
    DegreeData d;
    d.n = n;
    d.parts = partitions_of(n);
    const std::size_t N = d.parts.size();
    for (std::size_t i = 0; i < N; ++i) d.index.emplace(d.parts[i], i);
    auto dense = [&](const std::function<detail::Expansion(const Partition&)>& row) {
        Matrix mat(N, std::vector<RatFunc>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& [l, c] : row(d.parts[i])) mat[i][d.index.at(l)] = c;
        return mat;
    };
    d.p_to_m.assign(N, std::vector<RatFunc>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            d.p_to_m[i][j] = RatFunc(detail::p_to_m_coefficient(d.parts[i], d.parts[j]));
    d.m_to_p = detail::invert(d.p_to_m);
    d.e_to_p = dense([](const Partition& l) { return detail::product_expansion(l, detail::e_single); });
    d.g_to_p = dense([](const Partition& l) { return detail::product_expansion(l, detail::g_single); });
    d.p_to_e = dense([](const Partition& l) {
        return detail::product_expansion(l, [](int k) { return detail::p_single(k, true); });
    });
    d.p_to_g = dense([](const Partition& l) {
        return detail::product_expansion(l, [](int k) { return detail::p_single(k, false); });
    });
    for (const auto& rho : d.parts) d.p_norm.push_back(detail::p_norm(rho));
    d.m_gram.assign(N, std::vector<RatFunc>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
            RatFunc s;
            for (std::size_t r = 0; r < N; ++r)
                if (!d.m_to_p[i][r].zero() && !d.m_to_p[j][r].zero())
                    s += d.m_to_p[i][r] * d.m_to_p[j][r] * d.p_norm[r];
            d.m_gram[i][j] = s;
            d.m_gram[j][i] = s;
        }
    return d;
}

/// Gram-Schmidt in the monomial basis; returns P_to_m rows indexed like
/// d.parts.
inline Matrix gram_schmidt(const DegreeData& d, GramOrder order) {
    const std::size_t N = d.parts.size();
    Matrix P(N, std::vector<RatFunc>(N));
    std::vector<RatFunc> norm(N);
    std::vector<std::size_t> done;
    auto pair_m = [&](std::size_t lam, const std::vector<RatFunc>& v) {
        RatFunc s;
        for (std::size_t j = 0; j < N; ++j)
            if (!v[j].zero() && !d.m_gram[lam][j].zero()) s += d.m_gram[lam][j] * v[j];
        return s;
    };
    for (const auto& lambda : linear_extension(d.n, order)) {
        std::size_t i = d.index.at(lambda);
        std::vector<RatFunc> v(N);
        v[i] = RatFunc(1);
        for (std::size_t k : done) {
            RatFunc c = pair_m(i, P[k]);
            if (c.zero()) continue;
            c /= norm[k];
            for (std::size_t j = 0; j < N; ++j)
                if (!P[k][j].zero()) v[j] -= c * P[k][j];
        }
        RatFunc nn;
        for (std::size_t j = 0; j < N; ++j)
            if (!v[j].zero()) nn += v[j] * pair_m(j, v);
        P[i] = std::move(v);
        norm[i] = nn;
        done.push_back(i);
    }
    return P;
}

inline RatFunc b_factorized(const Partition& lambda) {
    RatFunc r(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            r *= (RatFunc(1) - qt_pow(a, l + 1)) / (RatFunc(1) - qt_pow(a + 1, l));
        }
    return r;
}

inline void add_macdonald_data(DegreeData& d, std::optional<Matrix> precomputed = std::nullopt) {
    const std::size_t N = d.parts.size();
    d.P_to_m = precomputed ? std::move(*precomputed) : gram_schmidt(d, GramOrder::reverse_lex);
    d.m_to_P = detail::invert(d.P_to_m);
    d.b.assign(N, RatFunc());
    for (std::size_t i = 0; i < N; ++i) {
        RatFunc nn;
        for (std::size_t j = 0; j < N; ++j) {
            if (d.P_to_m[i][j].zero()) continue;
            RatFunc s;
            for (std::size_t k = 0; k < N; ++k)
                if (!d.P_to_m[i][k].zero()) s += d.m_gram[j][k] * d.P_to_m[i][k];
            nn += d.P_to_m[i][j] * s;
        }
        d.b[i] = nn.inverse();
    }
    d.has_macdonald = true;
}

}  // namespace qtkern
