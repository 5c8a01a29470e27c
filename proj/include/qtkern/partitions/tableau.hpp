#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtkern/partitions/partition.hpp"

namespace qtkern {

enum class FillingFamily { Tb, Tbr, SSTb };

/// A filling of a Young diagram with letters 1..m.
///
/// `word` lists the entries in English reading order (rows left to right,
/// top to bottom); `theta[i][j]` counts the letter j+1 in row i+1.
struct RowFilling {
    Partition shape;
    int m = 0;
    std::vector<int> word;
    std::vector<std::vector<int>> theta;

    /// Entry of the cell (i, j), 1-based.
    int entry(int i, int j) const {
        int offset = 0;
        for (int r = 1; r < i; ++r) offset += shape[r];
        return word[static_cast<std::size_t>(offset + j - 1)];
    }

    bool rows_weakly_increasing() const {
        for (int i = 1; i <= shape.length(); ++i)
            for (int j = 1; j < shape[i]; ++j)
                if (entry(i, j) > entry(i, j + 1)) return false;
        return true;
    }

    bool columns_strictly_increasing() const {
        for (int i = 1; i < shape.length(); ++i)
            for (int j = 1; j <= shape[i + 1]; ++j)
                if (entry(i, j) >= entry(i + 1, j)) return false;
        return true;
    }

    /// theta as a row-major JSON-style array "[[a,b],[c,d]]".
    std::string theta_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < theta.size(); ++i) {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < theta[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(theta[i][j]);
            }
            s += "]";
        }
        return s + "]";
    }

    friend bool operator==(const RowFilling& a, const RowFilling& b) {
        return a.shape == b.shape && a.m == b.m && a.word == b.word;
    }
};

inline RowFilling make_filling(const Partition& shape, int m, std::vector<int> word) {
    RowFilling f;
    f.shape = shape;
    f.m = m;
    f.word = std::move(word);
    if (static_cast<int>(f.word.size()) != shape.size()) throw MalformedInput("word length differs from |lambda|");
    f.theta.assign(static_cast<std::size_t>(shape.length()), std::vector<int>(static_cast<std::size_t>(m), 0));
    std::size_t pos = 0;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape[i]; ++j) {
            int letter = f.word[pos++];
            if (letter < 1 || letter > m) throw MalformedInput("letter out of range");
            ++f.theta[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(letter - 1)];
        }
    return f;
}

/// Row-nondecreasing filling determined by theta.
inline RowFilling filling_from_theta(const Partition& shape, const std::vector<std::vector<int>>& theta) {
    std::vector<int> word;
    int m = theta.empty() ? 0 : static_cast<int>(theta[0].size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        int total = 0;
        for (std::size_t j = 0; j < theta[i].size(); ++j) {
            for (int k = 0; k < theta[i][j]; ++k) word.push_back(static_cast<int>(j) + 1);
            total += theta[i][j];
        }
        if (total != shape[static_cast<int>(i) + 1]) throw MalformedInput("theta row sum differs from lambda_i");
    }
    return make_filling(shape, m, std::move(word));
}

/// The filling with theta_{i,i} = lambda_i (row i filled with the letter i).
inline RowFilling diagonal_filling(const Partition& shape, int m) {
    if (m < shape.length()) throw DomainError("diagonal filling needs m >= length");
    std::vector<int> word;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape[i]; ++j) word.push_back(i);
    return make_filling(shape, m, std::move(word));
}

/// Visit every filling of the family, words in lexicographic order.
inline void for_each_filling(const Partition& shape, int m, FillingFamily family,
                             const std::function<void(const RowFilling&)>& visit) {
    if (m < 1) throw DomainError("m must be positive");
    const int n = shape.size();
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    // row and column of each reading position
    std::vector<int> row, col;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape[i]; ++j) {
            row.push_back(i);
            col.push_back(j);
        }
    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 2, 0);
    for (int i = 1; i <= shape.length(); ++i) row_start[static_cast<std::size_t>(i + 1)] = row_start[static_cast<std::size_t>(i)] + shape[i];
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(make_filling(shape, m, word));
            return;
        }
        int lo = 1;
        const int i = row[static_cast<std::size_t>(pos)], j = col[static_cast<std::size_t>(pos)];
        if (family != FillingFamily::Tb && j > 1) lo = word[static_cast<std::size_t>(pos - 1)];
        if (family == FillingFamily::SSTb && i > 1)
            lo = std::max(lo, word[static_cast<std::size_t>(row_start[static_cast<std::size_t>(i - 1)] + j - 1)] + 1);
        for (int v = lo; v <= m; ++v) {
            word[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<RowFilling> enumerate_fillings(const Partition& shape, int m, FillingFamily family) {
    std::vector<RowFilling> out;
    for_each_filling(shape, m, family, [&](const RowFilling& f) { out.push_back(f); });
    return out;
}

/// The sequence lambda^(0) ⊂ ... ⊂ lambda^(m) of prefix sums of theta, stored
/// as raw integer sequences of length l(lambda).
struct TableauChain {
    std::vector<std::vector<int>> shapes;
    std::vector<bool> is_partition;       // per shape
    std::vector<bool> horizontal_strip;   // per step k = 1..m (index k-1)
};

inline bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

inline TableauChain filling_to_chain(const RowFilling& T) {
    TableauChain c;
    const auto l = static_cast<std::size_t>(T.shape.length());
    std::vector<int> cur(l, 0);
    c.shapes.push_back(cur);
    c.is_partition.push_back(true);
    for (int k = 0; k < T.m; ++k) {
        std::vector<int> prev = cur;
        for (std::size_t i = 0; i < l; ++i) cur[i] += T.theta[i][static_cast<std::size_t>(k)];
        c.shapes.push_back(cur);
        bool part = weakly_decreasing(cur);
        c.is_partition.push_back(part);
        // lambda/mu is a horizontal strip iff lambda_{i+1} <= mu_i
        bool strip = part && weakly_decreasing(prev);
        for (std::size_t i = 0; strip && i + 1 < l; ++i)
            if (cur[i + 1] > prev[i]) strip = false;
        c.horizontal_strip.push_back(strip);
    }
    return c;
}

}  // namespace qtkern
