/**
 * @file degeneration.hpp
 * @brief Weights of i^* R^k j_* R^p f_* Q on the boundary of the Kuga-Sato family.
 *
 * Two independent routes:
 *   - `closed_form_weights`: the four-row closed form (rows by the range of k,
 *     with special rows for p = 1 and p = 6rg - 1), transcribed as stated.
 *   - `brute_force_weights`: the union, over every constituent lambda of
 *     Lambda^p((V^dual)^{+r}), of the weights of boundary_profile(lambda) at degree k.
 * `compare` puts them side by side and keeps concrete witnesses for every
 * weight the brute force finds outside the closed form.
 */
#pragma once

#include "picard/boundary.hpp"
#include "picard/character.hpp"
#include "picard/error.hpp"
#include "picard/exterior.hpp"
#include "picard/parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace picard {

namespace detail {

/// [num / den] for the N_p terms; every argument is non-negative in the valid range.
inline Coord floor_term(Coord num, Coord den) {
    if (num < 0 || den <= 0) throw std::logic_error("negative argument in an N_p floor term");
    return floor_div(num, den);
}

inline void check_k(int g, Coord k) {
    if (k < 0 || k > 4 * static_cast<Coord>(g) - 1)
        throw DomainError("k=" + std::to_string(k) + " is outside [0, 4g-1] = [0, " + std::to_string(4 * g - 1) + "]");
}

inline std::set<Coord> arithmetic_weights(Coord p, Coord g, Coord sign, Coord m_low, Coord m_high) {
    std::set<Coord> out;
    for (Coord m = m_low; m <= m_high; ++m) out.insert(p + sign * m * g);
    return out;
}

}  // namespace detail

inline std::set<Coord> closed_form_weights(int g, int r, Coord p, Coord k) {
    using detail::floor_term;
    if (g < 1 || r < 1) throw DomainError("g and r must be positive");
    detail::check_k(g, k);
    const Coord G = g;
    const Coord R = r;
    const Coord top = 6 * R * G;
    if (p < 0 || p > top) return {};

    if (p == 1 || p == top - 1) {
        if (1 <= k && k <= G) return {p};
        if (3 * G - 1 <= k && k <= 4 * G - 2) return {p + 4 * G};
        return {};
    }

    const Coord quotient = floor_term(p, G);
    const Coord outer = std::min({quotient, 6 * R - quotient, 2 * R});
    auto inner = [&] {
        const Coord shift = R * (k - G + 1);
        return std::min({quotient, floor_term(p + shift, k + 1), floor_term(top + shift - p, k + 1),
                         floor_term(top - p, G)});
    };

    if (k <= G - 1) return detail::arithmetic_weights(p, G, -1, 0, outer);
    if (k <= 2 * G - 1) return detail::arithmetic_weights(p, G, -1, -1, inner() - 1);
    if (k <= 3 * G - 1) return detail::arithmetic_weights(p, G, +1, 3, inner() + 3);
    return detail::arithmetic_weights(p, G, +1, 4, outer + 4);
}

struct SourcedContribution {
    TorusCharacter lambda;
    Contribution contribution;

    bool operator==(const SourcedContribution&) const = default;
};

struct BruteForceCell {
    std::map<Coord, std::vector<SourcedContribution>> by_weight;

    std::set<Coord> weights() const {
        std::set<Coord> out;
        for (const auto& [w, _] : by_weight) out.insert(w);
        return out;
    }
};

struct BruteForceTable {
    EnumerationSpec spec;
    std::map<Coord, BruteForceCell> cells;  // k -> cell, every k in [0, 4g-1] present
};

inline BruteForceTable brute_force_table(const EnumerationSpec& spec) {
    BruteForceTable table{spec, {}};
    for (Coord k = 0; k < 4 * static_cast<Coord>(spec.g); ++k) table.cells[k];
    for (const TorusCharacter& lambda : enumerate(spec).characters) {
        const WeightProfile profile = boundary_profile(lambda, spec.g);
        for (const auto& [n, list] : profile.witnesses) {
            auto cell = table.cells.find(n);
            if (cell == table.cells.end())
                throw std::logic_error("boundary degree " + std::to_string(n) + " outside [0, 4g-1]");
            for (const Contribution& c : list) cell->second.by_weight[c.weight].push_back({lambda, c});
        }
    }
    return table;
}

inline std::set<Coord> brute_force_weights(int g, int r, Coord p, Coord k) {
    detail::check_k(g, k);
    return brute_force_table({g, r, p}).cells.at(k).weights();
}

struct ComparisonEntry {
    Coord p = 0;
    Coord k = 0;
    std::set<Coord> closed_form;
    std::set<Coord> brute_force;
    bool match = true;
    std::vector<Coord> extra_weights;    // brute force only; each has witnesses
    std::vector<Coord> missing_weights;  // closed form only; no witness can exist
    std::vector<SourcedContribution> discrepancy_witnesses;
};

struct ComparisonReport {
    int g = 1;
    int r = 1;
    Coord p_min = 0;
    Coord p_max = 0;
    std::vector<ComparisonEntry> entries;  // ascending (p, k)

    std::vector<const ComparisonEntry*> mismatches() const {
        std::vector<const ComparisonEntry*> out;
        for (const auto& e : entries)
            if (!e.match) out.push_back(&e);
        return out;
    }

    const ComparisonEntry* find(Coord p, Coord k) const {
        for (const auto& e : entries)
            if (e.p == p && e.k == k) return &e;
        return nullptr;
    }
};

/// Closed form vs brute force over p in [p_min, p_max] (default 0 .. 6rg) and every k.
inline ComparisonReport compare(int g, int r, std::optional<std::pair<Coord, Coord>> p_range = std::nullopt,
                                unsigned threads = 1) {
    if (g < 1 || r < 1) throw DomainError("g and r must be positive");
    const auto [p_min, p_max] = p_range.value_or(std::pair<Coord, Coord>{0, total_rank(g, r)});
    if (p_min > p_max) throw DomainError("empty p range");

    const std::size_t count = static_cast<std::size_t>(p_max - p_min + 1);
    auto rows = parallel_map<std::vector<ComparisonEntry>>(count, threads, [&](std::size_t i) {
        const Coord p = p_min + static_cast<Coord>(i);
        const BruteForceTable table = brute_force_table({g, r, p});
        std::vector<ComparisonEntry> row;
        for (const auto& [k, cell] : table.cells) {
            ComparisonEntry e;
            e.p = p;
            e.k = k;
            e.closed_form = closed_form_weights(g, r, p, k);
            e.brute_force = cell.weights();
            e.match = e.closed_form == e.brute_force;
            std::ranges::set_difference(e.brute_force, e.closed_form, std::back_inserter(e.extra_weights));
            std::ranges::set_difference(e.closed_form, e.brute_force, std::back_inserter(e.missing_weights));
            for (Coord w : e.extra_weights) {
                const auto& list = cell.by_weight.at(w);
                e.discrepancy_witnesses.insert(e.discrepancy_witnesses.end(), list.begin(), list.end());
            }
            row.push_back(std::move(e));
        }
        return row;
    });

    ComparisonReport report{g, r, p_min, p_max, {}};
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    return report;
}

/// One checked-in known-discrepancy cell.
struct LedgerCell {
    int g = 1;
    int r = 1;
    Coord p = 0;
    Coord k = 0;
    std::string note;
};

struct KnownDiscrepancyLedger {
    std::vector<LedgerCell> cells;

    bool contains(int g, int r, Coord p, Coord k) const {
        return std::ranges::any_of(cells, [&](const LedgerCell& c) { return c.g == g && c.r == r && c.p == p && c.k == k; });
    }
};

}  // namespace picard
