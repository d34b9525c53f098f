/**
 * @file classify_constituents.cpp
 * @brief Tallies interior-motive verdicts over every constituent of Lambda^p((V^dual)^r).
 *
 * Usage: classify_constituents [g] [r]   (defaults 2 1)
 */
#include "picard/picard.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace picard;
    const int g = argc > 1 ? std::atoi(argv[1]) : 2;
    const int r = argc > 2 ? std::atoi(argv[2]) : 1;
    try {
        std::map<Verdict, int> tally;
        for (Coord p = 0; p <= total_rank(g, r); ++p)
            for (const auto& lambda : enumerate({g, r, p}).characters) {
                const Classification c = classify(lambda, {g, r, p});
                ++tally[c.verdict];
                if (c.verdict == Verdict::WeightObstruction)
                    std::cout << to_string(lambda) << "  weight " << c.witness->weight << " in degree "
                              << c.witness->degree << " via " << to_string(c.witness->sigma) << "\n";
            }
        for (const auto& [v, count] : tally) std::cout << name(v) << ": " << count << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
