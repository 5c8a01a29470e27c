#pragma once

#include "qtkern/wfock/modes.hpp"

namespace qtkern {

enum class StructureKind { f_kl, A, B, gamma_plus, gamma_minus, g, G_plus, G_minus };

namespace detail {
inline ModeCoeff qt_common() { return (RatFunc(1) - q_mode(1)) * (RatFunc(1) - t_mode(-1)); }
}  // namespace detail

/// f_{k,l}: (1-q^n)(1-t^{-n})(p^{(k-1)n} - p^{(l-1)n}) / (1-p^{ln}).
inline ModeCoeff f_log(int k, int l) {
    return detail::qt_common() * (p_mode(k - 1) - p_mode(l - 1)) / (RatFunc(1) - p_mode(l));
}

/// A with gamma^n given as a mode coefficient.
inline ModeCoeff A_log(const ModeCoeff& gamma_n) {
    ModeCoeff g2 = gamma_n.pow(-2);
    return detail::qt_common() * (RatFunc(1) - p_mode(-1) * g2) / (RatFunc(1) - g2);
}

inline ModeCoeff B_log(const ModeCoeff& gamma_n) {
    ModeCoeff g2 = gamma_n.pow(-2);
    return detail::qt_common() * (p_mode(-2) * g2 - p_mode(-1) * g2) / (RatFunc(1) - g2);
}

/// gamma^n at level m, gamma = p^{-m/2}.
inline ModeCoeff gamma_mode(int m) { return p_mode_quarter(-2 * m); }

/// gamma_+(z, w; q, u) in x = w/z, with u^n given; u = t or u = p.
inline ModeCoeff gamma_plus_log(const ModeCoeff& u_n) {
    return RatFunc(1) + u_n.inverse() - q_mode(-1) - q_mode(1) / u_n;
}

inline ModeCoeff gamma_minus_log(const ModeCoeff& u_n) {
    return RatFunc(1) + u_n - q_mode(1) - q_mode(-1) * u_n;
}

inline ModeCoeff G_plus_log() { return -(q_mode(1) + t_mode(-1) + q_mode(-1) * t_mode(1)); }
inline ModeCoeff G_minus_log() { return -(q_mode(-1) + t_mode(1) + q_mode(1) * t_mode(-1)); }
inline ModeCoeff g_log() { return G_plus_log() - G_minus_log(); }

/// Log coefficient of a named structure function. k, l index f_{k,l};
/// m fixes gamma = p^{-m/2} for A and B; gamma_+- take the parameter p.
inline ModeCoeff structure_log(StructureKind kind, int k = 1, int l = 2, int m = 2) {
    switch (kind) {
        case StructureKind::f_kl: return f_log(k, l);
        case StructureKind::A: return A_log(gamma_mode(m));
        case StructureKind::B: return B_log(gamma_mode(m));
        case StructureKind::gamma_plus: return gamma_plus_log(p_mode(1));
        case StructureKind::gamma_minus: return gamma_minus_log(p_mode(1));
        case StructureKind::g: return g_log();
        case StructureKind::G_plus: return G_plus_log();
        case StructureKind::G_minus: return G_minus_log();
    }
    throw DomainError("unknown structure function");
}

}  // namespace qtkern
