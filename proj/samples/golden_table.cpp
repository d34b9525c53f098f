/**
 * @file golden_table.cpp
 * @brief Prints the boundary weight table of the non-regular g=2 character ((1,0,-1),(0,0,0),-1).
 */
#include "picard/picard.hpp"

#include <iostream>

int main() {
    using namespace picard;
    const TorusCharacter lambda = parse_character("1,0,-1;0,0,0|-1", 2);
    const WeightProfile profile = boundary_profile(lambda, 2);

    std::cout << "lambda = " << to_string(lambda) << ", p = " << degree(lambda) << "\n";
    for (Coord n = 0; n < 8; ++n) {
        std::cout << "degree " << n << ":";
        for (Coord w : profile.weights_at(n)) std::cout << " " << w;
        std::cout << "\n";
    }
    const Classification verdict = classify(lambda, {2, 1, degree(lambda)});
    std::cout << "verdict: " << name(verdict.verdict) << "\n";
}
