#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

/// Base-b representation, least significant digit first. Canonical form:
/// the most significant stored digit is nonzero, and zero has no digits.
struct DigitString {
    std::uint64_t base = 2;
    std::vector<std::uint32_t> digits;  // digits[0] is the least significant

    /// Digit at position i, implicit 0 beyond the stored length.
    std::uint32_t at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
    bool operator==(const DigitString&) const = default;
};

DigitString to_digits(std::uint64_t n, std::uint64_t base);

/// Inverse of to_digits; rejects out-of-range digits and 64-bit overflow.
std::uint64_t from_digits(const DigitString& ds);

/// Per-digit parity, lsd first: 'e' for even digits, 'o' for odd ones.
std::string parity_pattern(const DigitString& ds);

/// Delete the digit at position 1 and shift the rest down.
///
/// Only valid in the regime where this models the divide-and-round-up move
/// carry-free: at least two digits, first digit odd, second digit even and
/// not base-1. General callers use to_digits(ceil_div(n, b)) instead.
DigitString remove_second_digit(const DigitString& ds);

/// Length of the maximal run of even digits starting at position 1.
/// Requires a nonempty string with odd first digit.
std::size_t first_even_block_length(const DigitString& ds);

/// Pattern with the first even block delimited, e.g. "o|ee|o" for 9 base 2.
std::string pretty_pattern(const DigitString& ds);

}  // namespace sdg
