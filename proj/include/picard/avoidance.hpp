/**
 * @file avoidance.hpp
 * @brief Deciding whether the lambda-part of the boundary motive avoids weights 0 and -1.
 *
 * The boundary motive is abelian, so avoidance can be read off realizations:
 * it holds iff degree n of the boundary cohomology of mu(V_lambda) has neither
 * weight n + p nor n + p + 1, with p the exterior degree of lambda.
 */
#pragma once

#include "picard/boundary.hpp"
#include "picard/character.hpp"
#include "picard/exterior.hpp"

#include <optional>
#include <string_view>

namespace picard {

struct AvoidanceResult {
    bool avoids = true;
    std::optional<Contribution> witness;  // first forbidden contribution in profile order
};

inline AvoidanceResult avoids_weights(const TorusCharacter& lambda, int g) {
    const WeightProfile profile = boundary_profile(lambda, g);
    const Coord p = degree(lambda);
    for (const auto& [n, list] : profile.witnesses)
        for (const Contribution& c : list)
            if (c.weight == n + p || c.weight == n + p + 1) return {false, c};
    return {true, std::nullopt};
}

enum class Verdict { NotDominant, NotConstituent, BoundaryTrivial, InteriorMotiveDefined, WeightObstruction };

constexpr std::string_view name(Verdict v) {
    switch (v) {
        case Verdict::NotDominant: return "NotDominant";
        case Verdict::NotConstituent: return "NotConstituent";
        case Verdict::BoundaryTrivial: return "BoundaryTrivial";
        case Verdict::InteriorMotiveDefined: return "InteriorMotiveDefined";
        case Verdict::WeightObstruction: return "WeightObstruction";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::NotDominant;
    std::optional<Contribution> witness;  // set exactly for WeightObstruction
};

/// `spec.p` is ignored; membership is tested in the exterior power of degree(lambda).
inline Classification classify(const TorusCharacter& lambda, const EnumerationSpec& spec) {
    if (lambda.g() != spec.g)
        throw DomainError("character has g=" + std::to_string(lambda.g()) + ", spec has g=" + std::to_string(spec.g));
    if (!is_dominant(lambda)) return {Verdict::NotDominant, std::nullopt};
    if (!is_constituent(lambda, {spec.g, spec.r, degree(lambda)})) return {Verdict::NotConstituent, std::nullopt};
    if (!is_kostant_parallel(lambda)) return {Verdict::BoundaryTrivial, std::nullopt};
    AvoidanceResult result = avoids_weights(lambda, spec.g);
    if (result.avoids) return {Verdict::InteriorMotiveDefined, std::nullopt};
    return {Verdict::WeightObstruction, std::move(result.witness)};
}

}  // namespace picard
