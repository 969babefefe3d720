#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

/// Per-depth counts of distinct kernel subsequences n -> S(b^e * n + r),
/// compared by their first prefix_len values (n = 1..prefix_len). S is the
/// table sequence itself for a = 1 and the block subsequence SG(a*n)
/// otherwise. Stabilization = equal counts at the last two depths.
struct KernelReport {
    std::uint64_t a = 1;
    std::uint64_t b = 2;
    unsigned e_max = 0;
    std::size_t prefix_len = 0;
    std::vector<std::size_t> depth_counts;  // depth 0..e_max
    bool stabilized = false;
};

KernelReport kernel_report(const SgTable& table, unsigned e_max, std::size_t prefix_len);

/// Deterministic finite automaton with output reading base-b digits of n,
/// least significant digit first; after the last digit the current state's
/// output is S(n).
struct Dfao {
    std::uint64_t base = 2;
    std::size_t start = 0;
    std::vector<std::vector<std::uint32_t>> transitions;  // state x digit -> state
    std::vector<SgValue> outputs;
    std::uint64_t validated_to = 0;

    std::size_t state_count() const { return transitions.size(); }
    SgValue eval(std::uint64_t n) const {
        std::size_t q = start;
        while (n > 0) {
            q = transitions[q][n % base];
            n /= base;
        }
        return outputs[q];
    }
};

/// Construct a DFAO for the sequence S by merging kernel subsequences with
/// equal length-prefix_len prefixes, then validate it against the table for
/// every n <= validation_bound. Construction is rejected (ConfigError) when
/// the table is too small to close the kernel, when merged states disagree
/// on their output, or when validation finds a counterexample; for a > 1
/// every prime factor of a must divide b.
Dfao build_dfao(const SgTable& table, std::size_t prefix_len, std::uint64_t validation_bound);

}  // namespace sdg
