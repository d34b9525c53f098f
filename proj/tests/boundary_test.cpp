#include "picard/boundary.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace picard;

namespace {

TorusCharacter chr(std::vector<Triple> t, Coord d) { return TorusCharacter(std::move(t), d); }

using Table = std::map<Coord, std::map<Coord, std::uint64_t>>;

/// Degree -> weight set, ignoring multiplicities.
std::map<Coord, std::set<Coord>> weight_sets(const WeightProfile& profile) {
    std::map<Coord, std::set<Coord>> out;
    for (const auto& [n, weights] : profile.degrees)
        for (const auto& [w, _] : weights) out[n].insert(w);
    return out;
}

/// Independent profile: rho-shifted permutations, a - c compared across indices, binomial by Pascal.
Table reference_profile(const TorusCharacter& lambda) {
    const int g = lambda.g();
    std::vector<std::vector<std::uint64_t>> pascal(static_cast<std::size_t>(g));
    for (int n = 0; n < g; ++n) {
        pascal[n].assign(static_cast<std::size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    Table out;
    for (const WeylElement& sigma : all_elements(g)) {
        std::vector<Triple> moved;
        int len = 0;
        for (int i = 0; i < g; ++i) {
            moved.push_back(oracle::generic_dot(sigma[static_cast<std::size_t>(i)], lambda[i]));
            len += oracle::inversion_length(sigma[static_cast<std::size_t>(i)]);
        }
        const Coord diff = moved[0].a - moved[0].c;
        if (!std::ranges::all_of(moved, [&](const Triple& t) { return t.a - t.c == diff; })) continue;
        Coord weight = -2 * lambda.d();
        for (const Triple& t : moved) weight -= 2 * t.a + t.b;
        for (int p0 = 0; p0 < g; ++p0) out[p0 + len][weight] += pascal[g - 1][p0];
    }
    return out;
}

}  // namespace

TEST(KostantCohomology, Examples) {
    EXPECT_EQ(kostant_cohomology(chr({{0, 0, 0}}, 0), 3), std::vector{chr({{-2, 0, 2}}, 0)});
    EXPECT_EQ(kostant_cohomology(chr({{1, 0, -1}}, -1), 0), std::vector{chr({{1, 0, -1}}, -1)});
    const auto h1 = kostant_cohomology(chr({{1, 0, -1}, {0, 0, 0}}, -1), 1);
    EXPECT_EQ(h1.size(), 4u);
    EXPECT_NE(std::ranges::find(h1, chr({{-1, 2, -1}, {0, 0, 0}}, -1)), h1.end());
}

TEST(KostantCohomology, SizesFollowLengthCounts) {
    const auto lambda = chr({{2, 1, 0}, {0, 0, -1}}, -1);
    const auto counts = length_counts(2);
    for (int q = 0; q <= 6; ++q) EXPECT_EQ(kostant_cohomology(lambda, q).size(), counts[static_cast<std::size_t>(q)]);
}

TEST(KostantCohomology, Errors) {
    EXPECT_THROW(kostant_cohomology(chr({{0, 1, 0}}, 0), 0), DomainError);
    EXPECT_THROW(kostant_cohomology(chr({{0, 0, 0}}, 0), 4), DomainError);
    EXPECT_THROW(kostant_cohomology(chr({{0, 0, 0}}, 0), -1), DomainError);
}

TEST(HcTriviality, Examples) {
    EXPECT_EQ(hc_triviality(chr({{0, 0, 0}, {0, 0, 0}}, 0)), Coord{0});
    EXPECT_EQ(hc_triviality(chr({{1, 0, -1}, {0, 0, 0}}, -1)), std::nullopt);
    EXPECT_EQ(hc_triviality(chr({{-1, 2, -1}, {0, 0, 0}}, -1)), Coord{0});
    EXPECT_EQ(hc_triviality(chr({{-3, 2, 1}, {-2, 0, 2}}, -1)), Coord{-4});
}

TEST(HcMultiplicity, Examples) {
    EXPECT_EQ(hc_cohomology_multiplicity(3, 1, true), 2u);
    EXPECT_EQ(hc_cohomology_multiplicity(2, 0, false), 0u);
    EXPECT_EQ(hc_cohomology_multiplicity(1, 0, true), 1u);
    EXPECT_EQ(hc_cohomology_multiplicity(3, 3, true), 0u);
    EXPECT_EQ(hc_cohomology_multiplicity(3, -1, true), 0u);
    EXPECT_THROW(hc_cohomology_multiplicity(0, 0, true), DomainError);
}

TEST(BoundaryProfile, GenusTwoTable) {
    const auto profile = boundary_profile(chr({{1, 0, -1}, {0, 0, 0}}, -1), 2);
    const std::map<Coord, std::set<Coord>> expected{{1, {2}}, {2, {2}}, {5, {10}}, {6, {10}}};
    EXPECT_EQ(weight_sets(profile), expected);
    for (Coord n : {0, 3, 4, 7}) EXPECT_TRUE(profile.weights_at(n).empty());
}

TEST(BoundaryProfile, GenusTwoWitnessesAtDegreeFive) {
    const auto profile = boundary_profile(chr({{1, 0, -1}, {0, 0, 0}}, -1), 2);
    const auto& list = profile.witnesses.at(5);
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list[0].sigma, WeylElement({Perm::r123, Perm::s13}));
    EXPECT_EQ(list[0].mu, chr({{-3, 2, 1}, {-2, 0, 2}}, -1));
    EXPECT_EQ(list[1].sigma, WeylElement({Perm::r132, Perm::s13}));
    EXPECT_EQ(list[1].mu, chr({{-1, -2, 3}, {-2, 0, 2}}, -1));
    for (const auto& c : list) {
        EXPECT_EQ(c.p0, 0);
        EXPECT_EQ(c.q0, 5);
        EXPECT_EQ(c.weight, 10);
        EXPECT_EQ(c.positivity(), Positivity::TotallyNegative);
        EXPECT_EQ(c.m, -4);
        EXPECT_EQ(c.kostant_m(), 4);
    }
}

TEST(BoundaryProfile, EmptyWhenNotKostantParallel) {
    EXPECT_TRUE(boundary_profile(chr({{2, 0, -2}, {0, 0, 0}}, -2), 2).empty());
}

TEST(BoundaryProfile, GenusOneAllSixContribute) {
    const auto profile = boundary_profile(chr({{1, 0, -1}}, -1), 1);
    const Table expected{{0, {{0, 1}}}, {1, {{2, 2}}}, {2, {{6, 2}}}, {3, {{8, 1}}}};
    EXPECT_EQ(profile.degrees, expected);
    EXPECT_EQ(profile.contributions().size(), 6u);
}

TEST(BoundaryProfile, WitnessesAreSortedAndConsistent) {
    const auto profile = boundary_profile(chr({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 0), 3);
    for (const auto& [n, list] : profile.witnesses) {
        EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
        for (const auto& c : list) {
            EXPECT_EQ(c.degree, n);
            EXPECT_EQ(c.p0 + c.q0, n);
            EXPECT_EQ(c.q0, length(c.sigma));
            EXPECT_EQ(c.mu, dot_action(c.sigma, chr({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 0)));
            EXPECT_EQ(c.weight, hodge_weight(c.mu));
        }
    }
}

TEST(BoundaryProfile, MatchesReferenceOnRandomDominantCharacters) {
    oracle::CharacterGen gen(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int g = gen.small(1, 3);
        // small bound keeps the Kostant-parallel case frequent
        const auto lambda = gen.dominant(g, 2);
        EXPECT_EQ(boundary_profile(lambda, g).degrees, reference_profile(lambda)) << to_string(lambda);
    }
}

TEST(BoundaryProfile, Errors) {
    EXPECT_THROW(boundary_profile(chr({{0, 1, 0}}, 0), 1), DomainError);
    EXPECT_THROW(boundary_profile(chr({{0, 0, 0}}, 0), 2), DomainError);
}

TEST(KugaSatoProfile, ShiftsByExteriorDegree) {
    const auto shifted = kuga_sato_profile(chr({{1, 0, -1}, {0, 0, 0}}, -1), 2);
    const std::map<Coord, std::set<Coord>> expected{{3, {2}}, {4, {2}}, {7, {10}}, {8, {10}}};
    EXPECT_EQ(weight_sets(shifted), expected);
    const auto zero = chr({{0, 0, 0}}, 0);
    EXPECT_EQ(kuga_sato_profile(zero, 1).degrees, boundary_profile(zero, 1).degrees);
}
