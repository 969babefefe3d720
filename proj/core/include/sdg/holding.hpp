#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

/// Largest divisor of a that is relatively prime to b.
std::uint64_t coprime_part(std::uint64_t a, std::uint64_t b);

/// The gcd chain g_i = gcd(a/(g_1...g_{i-1}), b), ending when the gcd
/// reaches 1. Its product is a / coprime_part(a, b).
std::vector<std::uint64_t> g_sequence(std::uint64_t a, std::uint64_t b);

struct HoldingBounds {
    /// (4d^2+2d+2) * sum_{i=0..k} (2d)^i * g_1...g_i, with d = b/2.
    /// Absent for odd b, where the displayed formula does not apply.
    std::optional<std::uint64_t> exact;
    std::uint64_t rough = 0;  // a * b^a
};
HoldingBounds holding_bound(std::uint64_t a, std::uint64_t b);

/// Smallest block start (raw index) from which every complete length-s
/// block in the table is internally constant, provided at least min_blocks
/// such blocks confirm it; nullopt otherwise. Blocks end at multiples of s.
std::optional<std::uint64_t> detect_holding(const SgTable& table, std::uint64_t s,
                                            std::uint64_t min_blocks = 10);

struct PersistenceResult {
    bool ok = true;
    std::optional<std::uint64_t> first_counterexample;  // start of the offending block
};

/// Checks that whenever a length-g block is constant, the subsequent block
/// (shifted by a, the subtraction dependence) is constant too. Requires
/// g to divide gcd(a, b).
PersistenceResult verify_persistence(const SgTable& table, std::uint64_t g);

/// The block value subsequence SG(a*n), n = 1..n_max/a.
std::vector<SgValue> block_values(const SgTable& table, std::uint64_t a);

struct HoldingProfile {
    std::uint64_t a = 0, b = 0;
    std::vector<std::uint64_t> g_sequence;
    std::uint64_t a_prime = 1;
    std::uint64_t s = 1;  // predicted holding length a / a'
    std::uint64_t rough_bound = 0;
    std::optional<std::uint64_t> exact_bound;
    std::optional<std::uint64_t> onset_observed;  // raw index, from detect_holding
};

HoldingProfile holding_profile(const SgTable& table, std::uint64_t min_blocks = 10);

}  // namespace sdg
