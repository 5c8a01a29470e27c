#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qtkern/exactalg/errors.hpp"
#include "qtkern/exactalg/scalar.hpp"
#include "qtkern/exactalg/symbol.hpp"

namespace qtkern {

/// Laurent monomial: sparse exponent vector sorted by symbol name, no zero
/// exponents. Exponents of scaled symbols are in units of 1/scale.
class Monomial {
public:
    using Entry = std::pair<Symbol, int>;

    Monomial() = default;
    explicit Monomial(Symbol s, int e = 1) {
        if (e != 0) entries_.emplace_back(s, e);
    }
    explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> merged;
        for (auto& e : entries_) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
        entries_ = std::move(merged);
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_one() const noexcept { return entries_.empty(); }

    int exponent(Symbol s) const noexcept {
        for (const auto& [v, e] : entries_)
            if (v == s) return e;
        return 0;
    }

    /// Degree in true units (exponent / scale), scaled by 12 to stay integral.
    long weighted_degree() const noexcept {
        long d = 0;
        for (const auto& [v, e] : entries_) d += 12L * e / v.scale();
        return d;
    }

    bool all_nonnegative() const noexcept {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Entry& e) { return e.second >= 0; });
    }

    Monomial without(Symbol s) const {
        Monomial r;
        for (const auto& en : entries_)
            if (en.first != s) r.entries_.push_back(en);
        return r;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
                r.entries_.push_back(*i++);
            } else if (i == a.entries_.end() || j->first < i->first) {
                r.entries_.push_back(*j++);
            } else {
                int e = i->second + j->second;
                if (e != 0) r.entries_.emplace_back(i->first, e);
                ++i;
                ++j;
            }
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r = *this;
        for (auto& e : r.entries_) e.second = -e.second;
        return r;
    }

    Monomial pow(int k) const {
        if (k == 0) return {};
        Monomial r = *this;
        for (auto& e : r.entries_) e.second *= k;
        return r;
    }

    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

    /// Pure lexicographic comparison with symbols ordered by name; returns
    /// negative, zero or positive.
    friend int lex_compare(const Monomial& a, const Monomial& b) noexcept {
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
                return i->second > 0 ? 1 : -1;
            if (i == a.entries_.end() || j->first < i->first) return j->second > 0 ? -1 : 1;
            if (i->second != j->second) return i->second > j->second ? 1 : -1;
            ++i;
            ++j;
        }
        return 0;
    }

    /// Componentwise minimum of exponents (missing entries count as zero).
    friend Monomial min_exponents(const Monomial& a, const Monomial& b) {
        std::vector<Entry> out;
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
                if (i->second < 0) out.push_back(*i);
                ++i;
            } else if (i == a.entries_.end() || j->first < i->first) {
                if (j->second < 0) out.push_back(*j);
                ++j;
            } else {
                int e = std::min(i->second, j->second);
                if (e != 0) out.emplace_back(i->first, e);
                ++i;
                ++j;
            }
        }
        Monomial r;
        r.entries_ = std::move(out);
        return r;
    }

private:
    std::vector<Entry> entries_;
};

/// Descending lexicographic order: the first map entry is the leading term.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return lex_compare(a, b) > 0;
    }
};

/// Sparse Laurent polynomial with coefficients in C (Scalar or RatFunc).
template <typename C>
class Poly {
public:
    using Terms = std::map<Monomial, C, LexGreater>;

    Poly() = default;
    Poly(const C& c) {  // NOLINT(google-explicit-constructor)
        if (!is_zero(c)) terms_.emplace(Monomial{}, c);
    }
    Poly(long c) : Poly(C(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Monomial& m, const C& c) {
        if (!is_zero(c)) terms_.emplace(m, c);
    }
    explicit Poly(Symbol s, int e = 1) { terms_.emplace(Monomial(s, e), C(1)); }

    static Poly from_terms(Terms t) {
        Poly p;
        for (auto& [m, c] : t)
            if (!is_zero(c)) p.terms_.emplace(m, std::move(c));
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    C constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? C(0) : it->second;
    }
    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const C& leading_coefficient() const { return terms_.begin()->second; }

    std::set<Symbol> variables() const {
        std::set<Symbol> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vs.insert(v);
        return vs;
    }

    bool contains(Symbol s) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(s) != 0) return true;
        return false;
    }

    int degree(Symbol s) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(s);
            if (first || e > d) d = e;
            first = false;
        }
        return d;
    }
    int min_degree(Symbol s) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(s);
            if (first || e < d) d = e;
            first = false;
        }
        return d;
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    Monomial min_monomial() const {
        if (terms_.empty()) return {};
        auto it = terms_.begin();
        Monomial r = it->first;
        for (++it; it != terms_.end(); ++it) r = min_exponents(r, it->first);
        return r;
    }

    bool all_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.all_nonnegative(); });
    }

    /// View as a polynomial in s with coefficients free of s.
    std::map<int, Poly> coefficients_in(Symbol s) const {
        std::map<int, Poly> out;
        for (const auto& [m, c] : terms_) out[m.exponent(s)].terms_.emplace(m.without(s), c);
        return out;
    }

    Poly coefficient_in(Symbol s, int k) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (m.exponent(s) == k) out.terms_.emplace(m.without(s), c);
        return out;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly scaled(const C& s) const {
        if (is_zero(s)) return {};
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }

    Poly shifted(const Monomial& mono) const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
        return r;
    }

    Poly pow(unsigned k) const {
        Poly result(C(1));
        Poly base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return result;
    }

    template <typename F>
    auto map_coefficients(F&& f) const {
        using D = decltype(f(std::declval<const C&>()));
        Poly<D> r;
        typename Poly<D>::Terms t;
        for (const auto& [m, c] : terms_) t.emplace(m, f(c));
        return Poly<D>::from_terms(std::move(t));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    void add_term(const Monomial& m, const C& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    Terms terms_;
};

using MPoly = Poly<Scalar>;

inline MPoly monomial_poly(const Monomial& m, Scalar c = 1) { return MPoly(m, c); }

}  // namespace qtkern
