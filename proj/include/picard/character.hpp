/**
 * @file character.hpp
 * @brief Characters of the maximal torus of GL3^g x GL1.
 *
 * A character is written ((a_i, b_i, c_i)_{1<=i<=g}, d): one integer triple per
 * real place of the totally real field and a similitude coordinate d. The text
 * form is `a1,b1,c1;a2,b2,c2;...|d`.
 *
 * Everything here is a pure function of immutable values.
 */
#pragma once

#include "picard/error.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace picard {

struct Triple {
    Coord a = 0;
    Coord b = 0;
    Coord c = 0;

    auto operator<=>(const Triple&) const = default;
};

class TorusCharacter {
public:
    TorusCharacter(std::vector<Triple> triples, Coord d) : triples_(std::move(triples)), d_(d) {
        if (triples_.empty()) throw DomainError("a torus character needs at least one triple (g >= 1)");
    }

    int g() const noexcept { return static_cast<int>(triples_.size()); }
    Coord d() const noexcept { return d_; }
    const Triple& operator[](std::size_t i) const { return triples_[i]; }
    std::span<const Triple> triples() const noexcept { return triples_; }

    /// Lexicographic on (a1, b1, c1, ..., ag, bg, cg, d) for characters of equal g.
    auto operator<=>(const TorusCharacter&) const = default;
    bool operator==(const TorusCharacter&) const = default;

private:
    std::vector<Triple> triples_;
    Coord d_;
};

/// Canonical text form `a1,b1,c1;...;ag,bg,cg|d`.
inline std::string to_string(const TorusCharacter& lambda) {
    std::string out;
    for (int i = 0; i < lambda.g(); ++i) {
        if (i) out += ';';
        const Triple& t = lambda[i];
        out += std::to_string(t.a) + ',' + std::to_string(t.b) + ',' + std::to_string(t.c);
    }
    out += '|' + std::to_string(lambda.d());
    return out;
}

namespace detail {

inline bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

/// Parses one integer token occupying text[begin, end), surrounding blanks allowed.
inline Coord parse_integer(std::string_view text, std::size_t begin, std::size_t end, const std::string& what) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) throw ParseError("empty " + what, begin);
    Coord value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(what + " '" + std::string(first, last) + "' is out of range", begin);
    if (ec != std::errc() || ptr != last)
        throw ParseError(what + " '" + std::string(first, last) + "' is not an integer", begin);
    return value;
}

}  // namespace detail

/// Parses the text grammar `a1,b1,c1;...;ag,bg,cg|d`. Whitespace around tokens is ignored.
inline TorusCharacter parse_character(std::string_view text, int g) {
    if (g < 1) throw DomainError("g must be positive");
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' before the similitude coordinate", text.size());
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("more than one '|'", text.find('|', bar + 1));

    std::vector<Triple> triples;
    std::size_t group_begin = 0;
    int group = 0;
    while (true) {
        std::size_t group_end = text.find(';', group_begin);
        if (group_end == std::string_view::npos || group_end > bar) group_end = bar;
        ++group;
        const std::string label = "triple " + std::to_string(group);

        Coord values[3];
        std::size_t token_begin = group_begin;
        for (int component = 0; component < 3; ++component) {
            std::size_t token_end = text.find(',', token_begin);
            if (token_end == std::string_view::npos || token_end > group_end) token_end = group_end;
            if (component < 2 && token_end == group_end)
                throw ParseError(label + " has " + std::to_string(component + 1) + " entries, expected 3", token_begin);
            values[component] = detail::parse_integer(
                text, token_begin, token_end, label + " entry " + std::to_string(component + 1));
            token_begin = token_end + 1;
        }
        if (token_begin <= group_end) throw ParseError(label + " has more than 3 entries", token_begin - 1);
        triples.push_back({values[0], values[1], values[2]});

        if (group_end == bar) break;
        group_begin = group_end + 1;
    }
    if (static_cast<int>(triples.size()) != g)
        throw ParseError("expected " + std::to_string(g) + " triples, found " + std::to_string(triples.size()), 0);

    const Coord d = detail::parse_integer(text, bar + 1, text.size(), "similitude coordinate");
    return TorusCharacter(std::move(triples), d);
}

/// Exterior degree p = -2d - sum(a_i + b_i + c_i).
inline Coord degree(const TorusCharacter& lambda) {
    using namespace detail;
    Coord out = checked_mul(-2, lambda.d());
    for (const Triple& t : lambda.triples()) out = checked_sub(out, checked_add(checked_add(t.a, t.b), t.c));
    return out;
}

inline bool is_dominant(const TorusCharacter& lambda) {
    return std::ranges::all_of(lambda.triples(), [](const Triple& t) { return t.a >= t.b && t.b >= t.c; });
}

inline bool is_regular(const TorusCharacter& lambda) {
    return std::ranges::all_of(lambda.triples(), [](const Triple& t) { return t.a > t.b && t.b > t.c; });
}

/// All triples equal.
inline bool is_parallel(const TorusCharacter& lambda) {
    return std::ranges::all_of(lambda.triples(), [&](const Triple& t) { return t == lambda[0]; });
}

/// Which of the three linear conditions hold at one index for a given m.
///   I: a - c = m        J: b - c - 1 = m        K: a - b - 1 = m
struct Coverage {
    bool i = false;
    bool j = false;
    bool k = false;

    bool any() const noexcept { return i || j || k; }
    auto operator<=>(const Coverage&) const = default;
};

struct KostantParallelWitness {
    Coord m = 0;
    std::vector<Coverage> coverage;  // one entry per index

    bool operator==(const KostantParallelWitness&) const = default;
};

namespace detail {

struct ConditionValues {
    Coord i, j, k;
};

inline ConditionValues condition_values(const Triple& t) {
    return {checked_sub(t.a, t.c), checked_sub(checked_sub(t.b, t.c), 1), checked_sub(checked_sub(t.a, t.b), 1)};
}

}  // namespace detail

/// Every m for which each index satisfies at least one of I, J, K, in increasing m.
/// Candidates are drawn from the 3g attainable condition values.
inline std::vector<KostantParallelWitness> kostant_parallel_witnesses(const TorusCharacter& lambda) {
    std::vector<detail::ConditionValues> values;
    std::set<Coord> candidates;
    for (const Triple& t : lambda.triples()) {
        values.push_back(detail::condition_values(t));
        candidates.insert({values.back().i, values.back().j, values.back().k});
    }

    std::vector<KostantParallelWitness> out;
    for (Coord m : candidates) {
        KostantParallelWitness w{m, {}};
        bool covered = true;
        for (const auto& v : values) {
            Coverage c{v.i == m, v.j == m, v.k == m};
            if (!c.any()) {
                covered = false;
                break;
            }
            w.coverage.push_back(c);
        }
        if (covered) out.push_back(std::move(w));
    }
    return out;
}

inline bool is_kostant_parallel(const TorusCharacter& lambda) { return !kostant_parallel_witnesses(lambda).empty(); }

/// Boundary Hodge weight W(mu) = -2d - sum(2a_i + b_i).
inline Coord hodge_weight(const TorusCharacter& mu) {
    using namespace detail;
    Coord out = checked_mul(-2, mu.d());
    for (const Triple& t : mu.triples()) out = checked_sub(out, checked_add(checked_mul(2, t.a), t.b));
    return out;
}

/// ((a,b,c)_i, d) -> ((-c,-b,-a)_i, -3rg - d). Exchanges degree p with 6rg - p.
inline TorusCharacter duality(const TorusCharacter& lambda, int r) {
    using namespace detail;
    if (r < 1) throw DomainError("r must be positive");
    std::vector<Triple> triples;
    triples.reserve(lambda.g());
    for (const Triple& t : lambda.triples())
        triples.push_back({checked_mul(-1, t.c), checked_mul(-1, t.b), checked_mul(-1, t.a)});
    const Coord shift = checked_mul(checked_mul(3, r), lambda.g());
    return TorusCharacter(std::move(triples), checked_sub(checked_mul(-1, shift), lambda.d()));
}

/// Componentwise sum of two characters of equal g.
inline TorusCharacter operator+(const TorusCharacter& x, const TorusCharacter& y) {
    using namespace detail;
    if (x.g() != y.g()) throw DomainError("cannot add characters of different g");
    std::vector<Triple> triples;
    for (int i = 0; i < x.g(); ++i)
        triples.push_back({checked_add(x[i].a, y[i].a), checked_add(x[i].b, y[i].b), checked_add(x[i].c, y[i].c)});
    return TorusCharacter(std::move(triples), checked_add(x.d(), y.d()));
}

}  // namespace picard
