/**
 * @file boundary.hpp
 * @brief Weight bookkeeping of boundary cohomology at a cusp.
 *
 * Degree n of the boundary cohomology of mu(V_lambda) collects, over all
 * p0 + q0 = n, the lines H^{p0}(H_C, sigma . lambda) with l(sigma) = q0.
 * H_C is free abelian of rank g - 1 and acts on the line of character mu
 * trivially iff a_i - c_i is the same integer m at every index; then
 * H^{p0} has rank binomial(g - 1, p0), and otherwise it vanishes.
 */
#pragma once

#include "picard/character.hpp"
#include "picard/error.hpp"
#include "picard/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <set>
#include <vector>

namespace picard {

struct Contribution {
    WeylElement sigma;
    TorusCharacter mu;      // sigma . lambda
    Coord m = 0;            // common value of a_i - c_i on mu
    int p0 = 0;             // H_C cohomological degree
    int q0 = 0;             // = l(sigma)
    Coord degree = 0;       // p0 + q0, plus the exterior degree for Kuga-Sato profiles
    Coord weight = 0;       // hodge_weight(mu)
    std::uint64_t multiplicity = 0;

    Positivity positivity() const { return classify(sigma); }

    /// The shift m' >= -1 (totally positive) or m' >= 3 (totally negative) with
    /// weight = p - m'g resp. p + m'g. The raw H_C constant `m` has the opposite
    /// sign on the negative side.
    Coord kostant_m() const { return positivity() == Positivity::TotallyNegative ? -m : m; }

    bool operator==(const Contribution&) const = default;
};

/// Deterministic witness order: degree, weight, sigma, p0.
inline bool operator<(const Contribution& x, const Contribution& y) {
    return std::tie(x.degree, x.weight, x.sigma, x.p0) < std::tie(y.degree, y.weight, y.sigma, y.p0);
}

struct WeightProfile {
    int g = 1;
    std::map<Coord, std::map<Coord, std::uint64_t>> degrees;  // degree -> weight -> multiplicity
    std::map<Coord, std::vector<Contribution>> witnesses;     // degree -> contributions, sorted

    bool empty() const { return degrees.empty(); }

    std::set<Coord> weights_at(Coord degree) const {
        std::set<Coord> out;
        if (auto it = degrees.find(degree); it != degrees.end())
            for (const auto& [w, _] : it->second) out.insert(w);
        return out;
    }

    std::vector<Contribution> contributions() const {
        std::vector<Contribution> out;
        for (const auto& [_, list] : witnesses) out.insert(out.end(), list.begin(), list.end());
        return out;
    }

    void add(Contribution c) {
        degrees[c.degree][c.weight] += c.multiplicity;
        witnesses[c.degree].push_back(std::move(c));
    }
};

namespace detail {

inline void require_dominant(const TorusCharacter& lambda, const char* op) {
    if (!is_dominant(lambda))
        throw DomainError(std::string(op) + " needs a dominant character, got " + to_string(lambda));
}

}  // namespace detail

/// Kostant: H^q of the unipotent radical is spanned by sigma . lambda with l(sigma) = q.
inline std::vector<TorusCharacter> kostant_cohomology(const TorusCharacter& lambda, int q,
                                                      int max_rank = kDefaultMaxWeylRank) {
    detail::require_dominant(lambda, "kostant_cohomology");
    if (q < 0 || q > 3 * lambda.g()) throw DomainError("q must lie in [0, 3g]");
    std::vector<TorusCharacter> out;
    for_each_element(
        lambda.g(),
        [&](const WeylElement& sigma) {
            if (length(sigma) == q) out.push_back(dot_action(sigma, lambda));
        },
        max_rank);
    return out;
}

/// The common value m of a_i - c_i, if there is one.
inline std::optional<Coord> hc_triviality(const TorusCharacter& mu) {
    const Coord m = detail::checked_sub(mu[0].a, mu[0].c);
    for (const Triple& t : mu.triples())
        if (detail::checked_sub(t.a, t.c) != m) return std::nullopt;
    return m;
}

inline std::uint64_t hc_cohomology_multiplicity(int g, int p0, bool trivial) {
    if (g < 1) throw DomainError("g must be positive");
    if (!trivial || p0 < 0 || p0 > g - 1) return 0;
    return detail::binomial(static_cast<std::uint64_t>(g - 1), static_cast<std::uint64_t>(p0));
}

/// Weight profile of boundary cohomology of mu(V_lambda), degrees 0 .. 4g-1.
inline WeightProfile boundary_profile(const TorusCharacter& lambda, int g, int max_rank = kDefaultMaxWeylRank) {
    detail::require_dominant(lambda, "boundary_profile");
    if (lambda.g() != g)
        throw DomainError("character has g=" + std::to_string(lambda.g()) + ", expected " + std::to_string(g));
    WeightProfile profile{g, {}, {}};
    for_each_element(
        g,
        [&](const WeylElement& sigma) {
            TorusCharacter mu = dot_action(sigma, lambda);
            const auto m = hc_triviality(mu);
            if (!m) return;
            const Coord weight = hodge_weight(mu);
            const int q0 = length(sigma);
            for (int p0 = 0; p0 <= g - 1; ++p0)
                profile.add({sigma, mu, *m, p0, q0, p0 + q0, weight, hc_cohomology_multiplicity(g, p0, true)});
        },
        max_rank);
    for (auto& [_, list] : profile.witnesses) std::sort(list.begin(), list.end());
    return profile;
}

/// `boundary_profile` shifted up by the exterior degree p of lambda: the lambda-isotypic
/// part of the boundary cohomology of the r-fold Kuga-Sato family.
inline WeightProfile kuga_sato_profile(const TorusCharacter& lambda, int g, int max_rank = kDefaultMaxWeylRank) {
    const WeightProfile base = boundary_profile(lambda, g, max_rank);
    const Coord p = degree(lambda);
    WeightProfile out{g, {}, {}};
    for (const auto& [_, list] : base.witnesses)
        for (Contribution c : list) {
            c.degree = detail::checked_add(c.degree, p);
            out.add(std::move(c));
        }
    return out;
}

}  // namespace picard
