/**
 * @file weyl.hpp
 * @brief The Weyl group S3^g, lengths, positivity and the rho-shifted dot action.
 *
 * Each factor is one of the six permutations of {1,2,3}. The dot action
 * sigma . lambda = sigma(lambda + rho) - rho with rho_i = (1, 0, -1) is applied
 * per factor from its closed-form row; d is untouched.
 */
#pragma once

#include "picard/character.hpp"
#include "picard/error.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

enum class Perm : std::uint8_t { e, s12, s23, r123, r132, s13 };

/// Factor order used for lexicographic enumeration.
inline constexpr std::array<Perm, 6> kAllPerms{Perm::e, Perm::s12, Perm::s23, Perm::r123, Perm::r132, Perm::s13};

/// Refuse to enumerate S3^g beyond this rank by default (6^12 ~ 2.2e9).
inline constexpr int kDefaultMaxWeylRank = 12;

constexpr int length(Perm s) {
    switch (s) {
        case Perm::e: return 0;
        case Perm::s12:
        case Perm::s23: return 1;
        case Perm::r123:
        case Perm::r132: return 2;
        case Perm::s13: return 3;
    }
    return 0;
}

constexpr std::string_view name(Perm s) {
    switch (s) {
        case Perm::e: return "e";
        case Perm::s12: return "s12";
        case Perm::s23: return "s23";
        case Perm::r123: return "r123";
        case Perm::r132: return "r132";
        case Perm::s13: return "s13";
    }
    return "?";
}

/// sigma(t + rho) - rho for one factor.
inline Triple dot_action(Perm s, const Triple& t) {
    using namespace detail;
    switch (s) {
        case Perm::e: return t;
        case Perm::s12: return {checked_sub(t.b, 1), checked_add(t.a, 1), t.c};
        case Perm::s23: return {t.a, checked_sub(t.c, 1), checked_add(t.b, 1)};
        case Perm::r123: return {checked_sub(t.c, 2), checked_add(t.a, 1), checked_add(t.b, 1)};
        case Perm::r132: return {checked_sub(t.b, 1), checked_sub(t.c, 1), checked_add(t.a, 2)};
        case Perm::s13: return {checked_sub(t.c, 2), t.b, checked_add(t.a, 2)};
    }
    return t;
}

class WeylElement {
public:
    explicit WeylElement(std::vector<Perm> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw DomainError("a Weyl element needs at least one factor (g >= 1)");
    }

    static WeylElement identity(int g) { return WeylElement(std::vector<Perm>(static_cast<std::size_t>(g), Perm::e)); }

    int g() const noexcept { return static_cast<int>(factors_.size()); }
    Perm operator[](std::size_t i) const { return factors_[i]; }
    std::span<const Perm> factors() const noexcept { return factors_; }

    auto operator<=>(const WeylElement&) const = default;
    bool operator==(const WeylElement&) const = default;

private:
    std::vector<Perm> factors_;
};

/// `r123;s13` form.
inline std::string to_string(const WeylElement& sigma) {
    std::string out;
    for (int i = 0; i < sigma.g(); ++i) {
        if (i) out += ';';
        out += name(sigma[i]);
    }
    return out;
}

inline Perm parse_perm(std::string_view token, std::size_t offset = 0) {
    while (!token.empty() && detail::is_space(token.front())) token.remove_prefix(1), ++offset;
    while (!token.empty() && detail::is_space(token.back())) token.remove_suffix(1);
    if (token == "id") return Perm::e;
    for (Perm s : kAllPerms)
        if (name(s) == token) return s;
    throw ParseError("unknown permutation '" + std::string(token) + "'", offset);
}

inline WeylElement parse_weyl_element(std::string_view text, int g) {
    std::vector<Perm> factors;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(';', begin);
        const std::size_t stop = end == std::string_view::npos ? text.size() : end;
        factors.push_back(parse_perm(text.substr(begin, stop - begin), begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    if (static_cast<int>(factors.size()) != g)
        throw ParseError("expected " + std::to_string(g) + " factors, found " + std::to_string(factors.size()), 0);
    return WeylElement(std::move(factors));
}

/// l(sigma) = sum of factor lengths.
inline int length(const WeylElement& sigma) {
    int out = 0;
    for (Perm s : sigma.factors()) out += length(s);
    return out;
}

enum class Positivity { TotallyPositive, TotallyNegative, Mixed };

constexpr std::string_view name(Positivity p) {
    switch (p) {
        case Positivity::TotallyPositive: return "TotallyPositive";
        case Positivity::TotallyNegative: return "TotallyNegative";
        case Positivity::Mixed: return "Mixed";
    }
    return "?";
}

/// A factor is positive when its length is at most 1.
inline Positivity classify(const WeylElement& sigma) {
    bool any_positive = false;
    bool any_negative = false;
    for (Perm s : sigma.factors()) (length(s) <= 1 ? any_positive : any_negative) = true;
    if (!any_negative) return Positivity::TotallyPositive;
    if (!any_positive) return Positivity::TotallyNegative;
    return Positivity::Mixed;
}

inline TorusCharacter dot_action(const WeylElement& sigma, const TorusCharacter& lambda) {
    if (sigma.g() != lambda.g())
        throw DomainError("Weyl element has g=" + std::to_string(sigma.g()) + " but character has g=" +
                          std::to_string(lambda.g()));
    std::vector<Triple> triples;
    triples.reserve(lambda.g());
    for (int i = 0; i < lambda.g(); ++i) triples.push_back(dot_action(sigma[i], lambda[i]));
    return TorusCharacter(std::move(triples), lambda.d());
}

inline void check_weyl_budget(int g, int max_rank = kDefaultMaxWeylRank) {
    if (g < 1) throw DomainError("g must be positive");
    if (g > max_rank)
        throw BudgetError("refusing to enumerate 6^" + std::to_string(g) + " Weyl elements (limit g <= " +
                          std::to_string(max_rank) + ")");
}

/// Visits all 6^g elements in lexicographic factor order without materializing them.
template <class Visitor>
void for_each_element(int g, Visitor&& visit, int max_rank = kDefaultMaxWeylRank) {
    check_weyl_budget(g, max_rank);
    std::vector<std::size_t> digits(static_cast<std::size_t>(g), 0);
    std::vector<Perm> factors(static_cast<std::size_t>(g), Perm::e);
    while (true) {
        for (std::size_t i = 0; i < digits.size(); ++i) factors[i] = kAllPerms[digits[i]];
        visit(WeylElement(factors));
        std::size_t pos = digits.size();
        while (pos > 0 && ++digits[pos - 1] == kAllPerms.size()) digits[--pos] = 0;
        if (pos == 0) return;
    }
}

inline std::vector<WeylElement> all_elements(int g, int max_rank = kDefaultMaxWeylRank) {
    std::vector<WeylElement> out;
    for_each_element(g, [&](const WeylElement& s) { out.push_back(s); }, max_rank);
    return out;
}

/// Entry q counts elements of length q: the coefficients of (1 + 2t + 2t^2 + t^3)^g.
inline std::vector<std::uint64_t> length_counts(int g) {
    if (g < 1) throw DomainError("g must be positive");
    constexpr std::array<std::uint64_t, 4> factor{1, 2, 2, 1};
    std::vector<std::uint64_t> poly{1};
    for (int i = 0; i < g; ++i) {
        std::vector<std::uint64_t> next(poly.size() + 3, 0);
        for (std::size_t x = 0; x < poly.size(); ++x)
            for (std::size_t y = 0; y < factor.size(); ++y) next[x + y] += poly[x] * factor[y];
        poly = std::move(next);
    }
    return poly;
}

}  // namespace picard
