// Randomized invariants over the character lattice and the Weyl action.
#include "picard/picard.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace picard;

TEST(Property, DualityIsAnInvolution) {
    oracle::CharacterGen gen(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int g = gen.small(1, 4);
        const int r = gen.small(1, 3);
        const auto lambda = gen.any(g);
        EXPECT_EQ(duality(duality(lambda, r), r), lambda);
        EXPECT_EQ(degree(duality(lambda, r)), 6 * g * r - degree(lambda));
    }
}

TEST(Property, DotActionIsAGroupActionOfTheRightSize) {
    oracle::CharacterGen gen(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = gen.small(1, 2);
        const auto lambda = gen.dominant(g);
        std::set<TorusCharacter> orbit;
        for (const auto& sigma : all_elements(g)) {
            const auto mu = dot_action(sigma, lambda);
            EXPECT_EQ(mu.d(), lambda.d());
            // the dot action preserves a + b + c at each index
            for (int i = 0; i < g; ++i) EXPECT_EQ(mu[i].a + mu[i].b + mu[i].c, lambda[i].a + lambda[i].b + lambda[i].c);
            orbit.insert(mu);
        }
        // dominant lambda has a free rho-shifted orbit
        EXPECT_EQ(orbit.size(), all_elements(g).size()) << to_string(lambda);
    }
}

TEST(Property, KostantParallelIffProfileNonempty) {
    oracle::CharacterGen gen(9);
    for (int trial = 0; trial < 400; ++trial) {
        const int g = gen.small(1, 3);
        const auto lambda = gen.dominant(g, 3);
        EXPECT_EQ(is_kostant_parallel(lambda), !boundary_profile(lambda, g).empty()) << to_string(lambda);
    }
}

TEST(Property, ContributionsSatisfyWeightIdentities) {
    oracle::CharacterGen gen(10);
    for (int trial = 0; trial < 300; ++trial) {
        const int g = gen.small(1, 3);
        const auto lambda = gen.dominant(g, 3);
        for (const auto& c : boundary_profile(lambda, g).contributions())
            EXPECT_TRUE(identity_violations(lambda, c).empty()) << identity_violations(lambda, c).front();
    }
}

TEST(Property, ParseRoundTrip) {
    oracle::CharacterGen gen(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int g = gen.small(1, 5);
        const auto lambda = gen.any(g, 1000);
        EXPECT_EQ(parse_character(to_string(lambda), g), lambda);
    }
}

TEST(Property, EnumerationIsClosedUnderConstituentTest) {
    for (int g = 1; g <= 2; ++g)
        for (int r = 1; r <= 2; ++r)
            for (Coord p = 0; p <= 6 * g * r; ++p) {
                const EnumerationSpec spec{g, r, p};
                std::size_t count = 0;
                // brute scan of the whole box must find exactly the enumerated set
                const auto box = dominant_box(r);
                std::vector<std::size_t> idx(static_cast<std::size_t>(g), 0);
                while (true) {
                    std::vector<Triple> triples;
                    Coord sum = 0;
                    for (auto i : idx) {
                        triples.push_back(box[i]);
                        sum += box[i].a + box[i].b + box[i].c;
                    }
                    if ((p + sum) % 2 == 0) {
                        const TorusCharacter lambda(triples, -(p + sum) / 2);
                        if (is_constituent(lambda, spec)) ++count;
                    }
                    std::size_t pos = 0;
                    while (pos < idx.size() && ++idx[pos] == box.size()) idx[pos++] = 0;
                    if (pos == idx.size()) break;
                }
                EXPECT_EQ(count, enumerate(spec).characters.size()) << "g=" << g << " r=" << r << " p=" << p;
            }
}
