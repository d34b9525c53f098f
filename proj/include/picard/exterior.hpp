/**
 * @file exterior.hpp
 * @brief Irreducible constituents of the exterior powers of (V^dual)^{+r}.
 *
 * V^dual splits, at each index i, into two GL3 pieces:
 *   - the "+" piece with highest weight (0,0,-1) and similitude d = 0,
 *   - the "-" piece with highest weight (1,0,0) and similitude d = -1.
 * Its 6g weights, each repeated r times, give the 6gr weights of (V^dual)^{+r}.
 *
 * `enumerate` lists the dominant highest weights allowed by the inequality
 * system (degree, box, similitude window). `oracle_decompose` recomputes the
 * decomposition from scratch by summing weights of p-subsets and peeling
 * irreducible characters, and shares nothing with `enumerate`.
 */
#pragma once

#include "picard/character.hpp"
#include "picard/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace picard {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Refuse to visit more than this many candidate triple tuples in `enumerate`.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000;

struct EnumerationSpec {
    int g = 1;
    int r = 1;
    Coord p = 0;

    auto operator<=>(const EnumerationSpec&) const = default;
};

/// Rank 6gr of (V^dual)^{+r}.
inline Coord total_rank(int g, int r) { return detail::checked_mul(detail::checked_mul(6, g), r); }

struct ConstituentSet {
    EnumerationSpec spec;
    std::vector<TorusCharacter> characters;  // ascending lexicographic
};

namespace detail {

inline void check_spec(const EnumerationSpec& spec) {
    if (spec.g < 1) throw DomainError("g must be positive");
    if (spec.r < 1) throw DomainError("r must be positive");
}

inline Coord pos_part(Coord x) { return x > 0 ? x : 0; }
inline Coord neg_part(Coord x) { return x < 0 ? x : 0; }

}  // namespace detail

/// Degree p, box -r <= c_i <= b_i <= a_i <= r, and the global similitude window
/// 3gr + sum(x^-) >= -d >= sum(x^+).
inline bool is_constituent(const TorusCharacter& lambda, const EnumerationSpec& spec) {
    using namespace detail;
    check_spec(spec);
    if (lambda.g() != spec.g) throw DomainError("character g does not match the enumeration g");
    if (degree(lambda) != spec.p) return false;
    Coord positive = 0;
    Coord negative = 0;
    for (const Triple& t : lambda.triples()) {
        if (!(-spec.r <= t.c && t.c <= t.b && t.b <= t.a && t.a <= spec.r)) return false;
        positive += pos_part(t.a) + pos_part(t.b) + pos_part(t.c);
        negative += neg_part(t.a) + neg_part(t.b) + neg_part(t.c);
    }
    const Coord minus_d = checked_mul(-1, lambda.d());
    return 3 * static_cast<Coord>(spec.g) * spec.r + negative >= minus_d && minus_d >= positive;
}

/// Dominant triples in the box [-r, r]^3, ascending.
inline std::vector<Triple> dominant_box(int r) {
    std::vector<Triple> out;
    for (Coord a = -r; a <= r; ++a)
        for (Coord b = -r; b <= a; ++b)
            for (Coord c = -r; c <= b; ++c) out.push_back({a, b, c});
    return out;
}

inline ConstituentSet enumerate(const EnumerationSpec& spec, std::uint64_t budget = kDefaultEnumerationBudget) {
    detail::check_spec(spec);
    ConstituentSet out{spec, {}};
    if (spec.p < 0 || spec.p > total_rank(spec.g, spec.r)) return out;

    const std::vector<Triple> box = dominant_box(spec.r);
    std::uint64_t tuples = 1;
    for (int i = 0; i < spec.g; ++i) {
        if (tuples > budget / box.size())
            throw BudgetError("enumeration would visit more than " + std::to_string(budget) + " triple tuples");
        tuples *= box.size();
    }

    const std::size_t g = static_cast<std::size_t>(spec.g);
    std::vector<std::size_t> digits(g, 0);
    std::vector<Triple> triples(g);
    while (true) {
        Coord sum = 0;
        for (std::size_t i = 0; i < g; ++i) {
            triples[i] = box[digits[i]];
            sum += triples[i].a + triples[i].b + triples[i].c;
        }
        // p = -2d - sum  =>  d = -(p + sum) / 2 when the parity allows it
        const Coord twice_minus_d = spec.p + sum;
        if (twice_minus_d % 2 == 0) {
            TorusCharacter lambda(triples, -twice_minus_d / 2);
            if (is_constituent(lambda, spec)) out.characters.push_back(std::move(lambda));
        }
        std::size_t pos = g;
        while (pos > 0 && ++digits[pos - 1] == box.size()) digits[--pos] = 0;
        if (pos == 0) break;
    }
    std::ranges::sort(out.characters);
    return out;
}

/// Gelfand-Tsetlin count: pairs (u, v) with a >= u >= b >= v >= c, u >= w1 >= v,
/// u + v = w1 + w2, provided a + b + c = w1 + w2 + w3.
inline std::uint64_t gl3_weight_multiplicity(const Triple& high, const Triple& w) {
    if (!(high.a >= high.b && high.b >= high.c))
        throw DomainError("gl3_weight_multiplicity needs a dominant highest weight");
    if (high.a + high.b + high.c != w.a + w.b + w.c) return 0;
    std::uint64_t count = 0;
    for (Coord u = high.b; u <= high.a; ++u) {
        const Coord v = w.a + w.b - u;
        if (v < high.c || v > high.b) continue;
        if (u >= w.a && w.a >= v) ++count;
    }
    return count;
}

/// Weyl dimension formula for GL3: (a-b+1)(b-c+1)(a-c+2)/2.
inline std::uint64_t weyl_dimension(const Triple& high) {
    if (!(high.a >= high.b && high.b >= high.c)) throw DomainError("weyl_dimension needs a dominant highest weight");
    return static_cast<std::uint64_t>((high.a - high.b + 1) * (high.b - high.c + 1) * (high.a - high.c + 2) / 2);
}

inline std::uint64_t weyl_dimension(const TorusCharacter& lambda) {
    std::uint64_t out = 1;
    for (const Triple& t : lambda.triples()) out *= weyl_dimension(t);
    return out;
}

/// The 6g distinct weights of V^dual, "+" piece then "-" piece at each index.
inline std::vector<TorusCharacter> dual_basis_weights(int g) {
    if (g < 1) throw DomainError("g must be positive");
    const std::vector<Triple> plus{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    const std::vector<Triple> minus{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<TorusCharacter> out;
    for (int i = 0; i < g; ++i) {
        for (const auto& [weights, d] : {std::pair{plus, Coord{0}}, std::pair{minus, Coord{-1}}}) {
            for (const Triple& w : weights) {
                std::vector<Triple> triples(static_cast<std::size_t>(g));
                triples[static_cast<std::size_t>(i)] = w;
                out.emplace_back(std::move(triples), d);
            }
        }
    }
    return out;
}

struct OracleTerm {
    TorusCharacter character;
    std::uint64_t multiplicity = 0;

    bool operator==(const OracleTerm&) const = default;
};

namespace detail {

using WeightMultiset = std::map<TorusCharacter, std::int64_t>;

/// Weight multiset of Lambda^p: each distinct basis weight j is taken k_j <= r times
/// with coefficient binomial(r, k_j).
inline WeightMultiset exterior_weights(const EnumerationSpec& spec) {
    const std::vector<TorusCharacter> basis = dual_basis_weights(spec.g);
    const Coord r = spec.r;
    WeightMultiset out;

    std::vector<Triple> zero(static_cast<std::size_t>(spec.g));
    struct Frame {
        std::size_t index;
        Coord remaining;
        TorusCharacter weight;
        std::int64_t coefficient;
    };
    std::vector<Frame> stack;
    stack.push_back({0, spec.p, TorusCharacter(zero, 0), 1});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.remaining == 0) {
            out[f.weight] += f.coefficient;
            continue;
        }
        if (f.index == basis.size()) continue;
        // prune: the rest of the basis cannot absorb what is left
        if (f.remaining > static_cast<Coord>(basis.size() - f.index) * r) continue;
        TorusCharacter weight = f.weight;
        for (Coord k = 0; k <= std::min(r, f.remaining); ++k) {
            const auto coefficient =
                f.coefficient * static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k)));
            stack.push_back({f.index + 1, f.remaining - k, weight, coefficient});
            weight = weight + basis[f.index];
        }
    }
    return out;
}

/// All weights of the GL3 irreducible with highest weight `high`, with multiplicities.
inline std::vector<std::pair<Triple, std::uint64_t>> gl3_character(const Triple& high) {
    std::vector<std::pair<Triple, std::uint64_t>> out;
    const Coord total = high.a + high.b + high.c;
    for (Coord x = high.c; x <= high.a; ++x)
        for (Coord y = high.c; y <= high.a; ++y) {
            const Triple w{x, y, total - x - y};
            if (const auto m = gl3_weight_multiplicity(high, w)) out.emplace_back(w, m);
        }
    return out;
}

}  // namespace detail

/// Decomposes Lambda^p((V^dual)^{+r}) into irreducibles by exhaustion:
/// build the full weight multiset, then repeatedly take the lexicographically
/// largest dominant weight present and subtract its irreducible character.
inline std::vector<OracleTerm> oracle_decompose(const EnumerationSpec& spec,
                                                std::uint64_t subset_budget = kDefaultSubsetBudget) {
    detail::check_spec(spec);
    const Coord n = total_rank(spec.g, spec.r);
    if (spec.p < 0 || spec.p > n) return {};
    const std::uint64_t subsets =
        detail::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(spec.p));
    if (subsets > subset_budget)
        throw BudgetError("binomial(" + std::to_string(n) + ", " + std::to_string(spec.p) + ") = " +
                          std::to_string(subsets) + " subsets exceeds the budget of " + std::to_string(subset_budget));

    detail::WeightMultiset weights = detail::exterior_weights(spec);
    std::vector<OracleTerm> out;
    while (!weights.empty()) {
        auto top = std::find_if(weights.rbegin(), weights.rend(), [](const auto& kv) { return is_dominant(kv.first); });
        if (top == weights.rend()) throw OracleFailure("weights remain but none of them is dominant");
        const TorusCharacter high = top->first;
        const std::int64_t count = top->second;
        if (count <= 0) throw OracleFailure("non-positive multiplicity at highest weight " + to_string(high));
        out.push_back({high, static_cast<std::uint64_t>(count)});

        std::vector<std::vector<std::pair<Triple, std::uint64_t>>> factors;
        for (const Triple& t : high.triples()) factors.push_back(detail::gl3_character(t));

        const std::size_t g = factors.size();
        std::vector<std::size_t> digits(g, 0);
        std::vector<Triple> triples(g);
        while (true) {
            std::int64_t mult = count;
            for (std::size_t i = 0; i < g; ++i) {
                triples[i] = factors[i][digits[i]].first;
                mult *= static_cast<std::int64_t>(factors[i][digits[i]].second);
            }
            TorusCharacter w(triples, high.d());
            auto it = weights.find(w);
            if (it == weights.end() || it->second < mult)
                throw OracleFailure("peeling " + to_string(high) + " drives weight " + to_string(w) + " negative");
            if ((it->second -= mult) == 0) weights.erase(it);

            std::size_t pos = g;
            while (pos > 0 && ++digits[pos - 1] == factors[pos - 1].size()) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    std::ranges::sort(out, [](const OracleTerm& x, const OracleTerm& y) { return x.character < y.character; });
    return out;
}

}  // namespace picard
