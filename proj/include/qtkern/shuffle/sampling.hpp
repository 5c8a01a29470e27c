#pragma once

#include <cstdint>
#include <random>

#include "qtkern/shuffle/omega.hpp"

namespace qtkern {

/// Seeded source of small-height rationals for pointwise identity checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// num/den with 1 <= |num|, den <= height, never 0 or ±1.
    Scalar rational(int height = 9) {
        std::uniform_int_distribution<int> num(-height, height), den(1, height);
        for (;;) {
            Scalar r(num(rng_), den(rng_));
            r.canonicalize();
            if (r != 0 && r != 1 && r != -1) return r;
        }
    }

    /// Random (q,t) avoiding q^a t^b = 1 for small (a,b) != (0,0), so that
    /// no denominator of the form 1 - q^a t^b vanishes.
    Parameters parameters(int bound = 8) {
        for (;;) {
            Scalar q = rational(), t = rational();
            if (generic(q, t, bound)) return Parameters::numeric(q, t);
        }
    }

    /// n pairwise distinct nonzero rationals.
    Points points(std::size_t n) {
        std::vector<Scalar> seen;
        Points out;
        while (out.size() < n) {
            Scalar r = rational(12);
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            seen.push_back(r);
            out.emplace_back(r);
        }
        return out;
    }

private:
    static bool generic(const Scalar& q, const Scalar& t, int bound) {
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b) {
                if (a == 0 && b == 0) continue;
                if (pow(q, a) * pow(t, b) == 1) return false;
            }
        return true;
    }

    std::mt19937_64 rng_;
};

}  // namespace qtkern
