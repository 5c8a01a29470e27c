#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtkern/exactalg/errors.hpp"

namespace qtkern {

/// Integer partition with strictly positive parts in weakly decreasing order.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw MalformedInput("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw MalformedInput("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part, zero beyond the length.
    int operator[](int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Multiplicity of the part value k.
    int multiplicity(int k) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= (*this)[1]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    /// Union of parts (the product in multiplicative bases).
    friend Partition operator+(const Partition& a, const Partition& b) {
        std::vector<int> v = a.parts_;
        v.insert(v.end(), b.parts_.begin(), b.parts_.end());
        std::sort(v.begin(), v.end(), std::greater<>());
        return Partition(std::move(v));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
    /// Lexicographic order on part sequences.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    /// "3,1"; the empty partition serializes as "".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(std::string_view s) {
        std::vector<int> v;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw MalformedInput("empty part in partition '" + std::string(s) + "'");
            v.push_back(std::stoi(cur));
            cur.clear();
        };
        if (s.empty()) return {};
        for (char c : s) {
            if (c == ',') flush();
            else if (c >= '0' && c <= '9') cur += c;
            else if (c != ' ') throw MalformedInput("bad character in partition '" + std::string(s) + "'");
        }
        flush();
        return Partition(std::move(v));
    }

private:
    std::vector<int> parts_;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// mu <= lambda in dominance order.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) return false;
    int a = 0, b = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

/// Arm and leg of the cell (i, j), 1-based.
inline std::pair<int, int> arm_leg(const Partition& lambda, int i, int j) {
    if (i < 1 || j < 1 || j > lambda[i]) throw DomainError("cell outside the diagram");
    return {lambda[i] - j, lambda.conjugate()[j] - i};
}

/// z_lambda = prod_i i^{m_i} m_i!.
inline long z_factor(const Partition& lambda) {
    long z = 1;
    for (int k = 1; k <= lambda[1]; ++k) {
        int m = lambda.multiplicity(k);
        for (int r = 1; r <= m; ++r) z *= static_cast<long>(k) * r;
    }
    return z;
}

inline long factorial(int n) {
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace qtkern
