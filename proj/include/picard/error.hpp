/**
 * @file error.hpp
 * @brief Exception hierarchy and overflow-checked integer helpers.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace picard {

/// Coordinate type for all lattice quantities (weights, degrees, shifts).
using Coord = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed character or Weyl element text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Precondition violation on otherwise well-formed input (g mismatch, non-dominant weight, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration guard refused to run.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// The decomposition oracle reached an impossible state. Never recoverable.
class OracleFailure : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline Coord checked_add(Coord x, Coord y) {
    Coord out;
    if (__builtin_add_overflow(x, y, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

inline Coord checked_sub(Coord x, Coord y) {
    Coord out;
    if (__builtin_sub_overflow(x, y, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

inline Coord checked_mul(Coord x, Coord y) {
    Coord out;
    if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

/// Binomial coefficient, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays integral at every step
        unsigned __int128 wide = static_cast<unsigned __int128>(out) * (n - k + i) / i;
        if (wide > UINT64_MAX) return UINT64_MAX;
        out = static_cast<std::uint64_t>(wide);
    }
    return out;
}

/// Floor division toward negative infinity.
inline Coord floor_div(Coord num, Coord den) {
    Coord q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace detail
}  // namespace picard
