#pragma once

#include <string>
#include <vector>

#include "qtkern/wfock/modes.hpp"

namespace qtkern {

/// One boson: exp(sum C(n)/n a_{-n} z^n) exp(sum A(n)/n a_n z^{-n}).
struct Slot {
    ModeCoeff creation;
    ModeCoeff annihilation;

    /// z -> p^{e/4} z.
    Slot shifted(int p_quarter) const {
        ModeCoeff s = p_mode_quarter(p_quarter);
        return {creation * s, annihilation / s};
    }
    Slot inverse() const { return {-creation, -annihilation}; }
    bool is_identity() const { return creation.zero() && annihilation.zero(); }

    friend Slot operator+(const Slot& a, const Slot& b) {
        return {a.creation + b.creation, a.annihilation + b.annihilation};
    }
    friend bool operator==(const Slot& a, const Slot& b) = default;
};

/// Normal ordered vertex operator in m independent bosons, times a scalar
/// prefactor.
class VertexOperator {
public:
    VertexOperator() = default;
    explicit VertexOperator(std::vector<Slot> slots, RatFunc prefactor = RatFunc(1))
        : slots_(std::move(slots)), prefactor_(std::move(prefactor)) {}

    static VertexOperator identity(int m) { return VertexOperator(std::vector<Slot>(static_cast<std::size_t>(m))); }

    int level() const noexcept { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const noexcept { return slots_; }
    const Slot& slot(int i) const { return slots_.at(static_cast<std::size_t>(i)); }
    Slot& slot(int i) { return slots_.at(static_cast<std::size_t>(i)); }
    const RatFunc& prefactor() const noexcept { return prefactor_; }

    VertexOperator shifted(int p_quarter) const {
        VertexOperator r = *this;
        for (auto& s : r.slots_) s = s.shifted(p_quarter);
        return r;
    }

    VertexOperator inverse() const {
        VertexOperator r = *this;
        for (auto& s : r.slots_) s = s.inverse();
        r.prefactor_ = prefactor_.inverse();
        return r;
    }

    VertexOperator scaled(const RatFunc& c) const {
        VertexOperator r = *this;
        r.prefactor_ *= c;
        return r;
    }

    bool is_identity() const {
        for (const auto& s : slots_)
            if (!s.is_identity()) return false;
        return true;
    }

    /// Slot coefficients agree; prefactors are ignored.
    bool same_modes(const VertexOperator& o) const { return slots_ == o.slots_; }

    friend bool operator==(const VertexOperator& a, const VertexOperator& b) {
        return a.slots_ == b.slots_ && a.prefactor_ == b.prefactor_;
    }

    /// :ab: with both factors at their own arguments already applied.
    friend VertexOperator normal_product(const VertexOperator& a, const VertexOperator& b) {
        check_level(a, b);
        VertexOperator r = a;
        for (std::size_t i = 0; i < r.slots_.size(); ++i) r.slots_[i] = r.slots_[i] + b.slots_[i];
        r.prefactor_ *= b.prefactor_;
        return r;
    }

    static void check_level(const VertexOperator& a, const VertexOperator& b) {
        if (a.level() != b.level())
            throw DomainError("vertex operators of levels " + std::to_string(a.level()) + " and " +
                              std::to_string(b.level()));
    }

private:
    std::vector<Slot> slots_;
    RatFunc prefactor_{1};
};

/// Log coefficient S(n) of V(z) W(w) = exp(sum S(n)/n (w/z)^n) :V(z) W(w):.
inline ModeCoeff contraction_log(const VertexOperator& left, const VertexOperator& right) {
    VertexOperator::check_level(left, right);
    ModeCoeff s;
    for (int i = 0; i < left.level(); ++i) s += left.slot(i).annihilation * right.slot(i).creation;
    return s * heisenberg_bracket();
}

struct NormalOrderedProduct {
    StructureFunction structure;  // in x = w/z
    VertexOperator left;
    VertexOperator right;

    /// :V(z) W(p^{e/4} z): as an operator in z.
    VertexOperator tail_at(int p_quarter) const { return normal_product(left, right.shifted(p_quarter)); }
};

inline NormalOrderedProduct heisenberg_contract(const VertexOperator& left, const VertexOperator& right) {
    return {StructureFunction(contraction_log(left, right)), left, right};
}

/// Product at equal arguments; only for pairs whose contraction vanishes.
inline VertexOperator ordered_product(const VertexOperator& a, const VertexOperator& b) {
    if (!contraction_log(a, b).zero()) throw DomainError("product at equal arguments needs normal ordering");
    return normal_product(a, b);
}

inline std::string to_string(const Slot& s) {
    return "{C: " + to_string(s.creation) + ", A: " + to_string(s.annihilation) + "}";
}

inline std::string to_string(const VertexOperator& v) {
    std::string out = to_string(v.prefactor()) + " * [";
    for (int i = 0; i < v.level(); ++i) out += (i ? ", " : "") + to_string(v.slot(i));
    return out + "]";
}

}  // namespace qtkern
