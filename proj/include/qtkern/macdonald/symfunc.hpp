#pragma once

#include <map>
#include <string>

#include "qtkern/exactalg/text.hpp"
#include "qtkern/partitions/partition.hpp"

namespace qtkern {

enum class Basis { m, e, p, g, P, Q };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::p: return "p";
        case Basis::g: return "g";
        case Basis::P: return "P";
        case Basis::Q: return "Q";
    }
    return "?";
}

inline Basis parse_basis(std::string_view s) {
    for (Basis b : {Basis::m, Basis::e, Basis::p, Basis::g, Basis::P, Basis::Q})
        if (basis_name(b) == s) return b;
    throw MalformedInput("unknown basis '" + std::string(s) + "'");
}

/// q^a t^b with integer exponents.
inline RatFunc qt_pow(int a, int b) { return RatFunc::monomial(qt_quarter(4 * a, 4 * b)); }
inline RatFunc q_pow(int a) { return qt_pow(a, 0); }
inline RatFunc t_pow(int b) { return qt_pow(0, b); }

/// Homogeneous symmetric function expanded in one basis.
struct SymFunc {
    Basis basis = Basis::m;
    int degree = 0;
    std::map<Partition, RatFunc> coeffs;

    static SymFunc basis_element(Basis b, const Partition& lambda) {
        SymFunc f{b, lambda.size(), {}};
        f.coeffs.emplace(lambda, RatFunc(1));
        return f;
    }

    RatFunc coefficient(const Partition& lambda) const {
        auto it = coeffs.find(lambda);
        return it == coeffs.end() ? RatFunc() : it->second;
    }

    void add(const Partition& lambda, const RatFunc& c) {
        if (c.zero()) return;
        auto [it, fresh] = coeffs.try_emplace(lambda, c);
        if (!fresh) {
            it->second += c;
            if (it->second.zero()) coeffs.erase(it);
        }
    }

    SymFunc scaled(const RatFunc& c) const {
        SymFunc r{basis, degree, {}};
        if (c.zero()) return r;
        for (const auto& [l, v] : coeffs) r.coeffs.emplace(l, v * c);
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis == b.basis && a.degree == b.degree && a.coeffs == b.coeffs;
    }
};

inline SymFunc operator+(SymFunc a, const SymFunc& b) {
    if (a.basis != b.basis || a.degree != b.degree) throw DomainError("adding symmetric functions of different kind");
    for (const auto& [l, c] : b.coeffs) a.add(l, c);
    return a;
}

/// Text form: terms c*b[parts] in reverse lexicographic order of partitions.
inline std::string to_string(const SymFunc& f) {
    if (f.coeffs.empty()) return "0";
    std::string out;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
        const RatFunc& c = it->second;
        std::string term = basis_name(f.basis) + "[" + it->first.to_string() + "]";
        if (c == RatFunc(1)) {
            if (!out.empty()) out += "+";
        } else if (c == RatFunc(-1)) {
            out += "-";
        } else {
            if (!out.empty()) out += "+";
            term = "(" + to_string(c) + ")*" + term;
        }
        out += term;
    }
    return out;
}

}  // namespace qtkern
