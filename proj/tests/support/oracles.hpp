// Test-only reference computations. Nothing here calls into the code paths it checks.
#pragma once

#include "picard/character.hpp"
#include "picard/weyl.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace picard::oracle {

/// Image of each position under the permutation: sigma(i) for i = 0, 1, 2.
inline std::array<int, 3> images(Perm s) {
    switch (s) {
        case Perm::e: return {0, 1, 2};
        case Perm::s12: return {1, 0, 2};
        case Perm::s23: return {0, 2, 1};
        case Perm::r123: return {1, 2, 0};  // 1 -> 2 -> 3 -> 1
        case Perm::r132: return {2, 0, 1};  // 1 -> 3 -> 2 -> 1
        case Perm::s13: return {2, 1, 0};
    }
    return {0, 1, 2};
}

/// Generic rho-shifted action: permute the entries of t + rho, then subtract rho.
inline Triple generic_dot(Perm s, const Triple& t) {
    constexpr std::array<Coord, 3> rho{1, 0, -1};
    const std::array<Coord, 3> shifted{t.a + rho[0], t.b + rho[1], t.c + rho[2]};
    std::array<Coord, 3> moved{};
    const auto img = images(s);
    for (int i = 0; i < 3; ++i) moved[img[i]] = shifted[i];
    return {moved[0] - rho[0], moved[1] - rho[1], moved[2] - rho[2]};
}

/// Length as the number of inversions of the permutation.
inline int inversion_length(Perm s) {
    const auto img = images(s);
    int count = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (img[i] > img[j]) ++count;
    return count;
}

/// Flat list of the 6gr weights of (V^dual)^{+r}: "+" piece has d = 0, "-" piece d = -1.
inline std::vector<std::vector<Coord>> flat_basis(int g, int r) {
    std::vector<std::vector<Coord>> out;
    const std::size_t width = static_cast<std::size_t>(3 * g + 1);
    for (int copy = 0; copy < r; ++copy)
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < 3; ++j) {
                std::vector<Coord> plus(width, 0), minus(width, 0);
                plus[static_cast<std::size_t>(3 * i + j)] = -1;
                minus[static_cast<std::size_t>(3 * i + j)] = 1;
                minus.back() = -1;
                out.push_back(plus);
                out.push_back(minus);
            }
    return out;
}

/// Weight multiset of Lambda^p by walking every p-subset bitmask (6gr <= 20 or so).
inline std::map<std::vector<Coord>, std::int64_t> subset_weights(int g, int r, int p) {
    const auto basis = flat_basis(g, r);
    const std::size_t n = basis.size();
    std::map<std::vector<Coord>, std::int64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != p) continue;
        std::vector<Coord> sum(basis.front().size(), 0);
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1)
                for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += basis[b][x];
        ++out[sum];
    }
    return out;
}

inline std::vector<Coord> flatten(const TorusCharacter& lambda) {
    std::vector<Coord> out;
    for (const Triple& t : lambda.triples()) out.insert(out.end(), {t.a, t.b, t.c});
    out.push_back(lambda.d());
    return out;
}

/// Coefficients of (1 + 2t + 2t^2 + t^3)^g by repeated convolution on a dense vector.
inline std::vector<std::uint64_t> length_polynomial(int g) {
    std::vector<std::uint64_t> poly(static_cast<std::size_t>(3 * g + 1), 0);
    poly[0] = 1;
    for (int step = 0; step < g; ++step) {
        std::vector<std::uint64_t> next(poly.size(), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (!poly[i]) continue;
            next[i] += poly[i];
            if (i + 1 < next.size()) next[i + 1] += 2 * poly[i];
            if (i + 2 < next.size()) next[i + 2] += 2 * poly[i];
            if (i + 3 < next.size()) next[i + 3] += poly[i];
        }
        poly = next;
    }
    return poly;
}

/// Random characters for property tests.
class CharacterGen {
public:
    explicit CharacterGen(std::uint64_t seed) : rng_(seed) {}

    Coord coord(Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng_); }
    int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    TorusCharacter any(int g, Coord bound = 6) {
        std::vector<Triple> triples;
        for (int i = 0; i < g; ++i) triples.push_back({coord(-bound, bound), coord(-bound, bound), coord(-bound, bound)});
        return TorusCharacter(std::move(triples), coord(-3 * bound, 3 * bound));
    }

    TorusCharacter dominant(int g, Coord bound = 6) {
        std::vector<Triple> triples;
        for (int i = 0; i < g; ++i) {
            const Coord c = coord(-bound, bound);
            const Coord b = c + coord(0, bound);
            triples.push_back({b + coord(0, bound), b, c});
        }
        return TorusCharacter(std::move(triples), coord(-3 * bound, 3 * bound));
    }

    WeylElement weyl(int g) {
        std::vector<Perm> factors;
        for (int i = 0; i < g; ++i) factors.push_back(kAllPerms[static_cast<std::size_t>(small(0, 5))]);
        return WeylElement(std::move(factors));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace picard::oracle
