#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

enum class Verdict { Zero, NonZero, Unknown };

inline Verdict flip(Verdict v) {
    if (v == Verdict::Zero) return Verdict::NonZero;
    if (v == Verdict::NonZero) return Verdict::Zero;
    return Verdict::Unknown;
}

/// Outcome of a zero/non-zero oracle: the verdict, which rule branch fired,
/// and how many digit removals were performed (0 for pure residue rules).
struct ZeroVerdict {
    Verdict verdict = Verdict::Unknown;
    std::string rule;
    std::uint32_t steps = 0;
};

/// Residue rule for G_{1,2d}: with l = n mod 4d, even l means a first-player
/// win; l in {2d+1, 2d+3, ..., 4d-1} means a loss. Other residues are Unknown.
ZeroVerdict residue_rule(std::uint64_t n, std::uint32_t d);

/// Complete zero characterization of SG_{1,2d}(n) from the base-2d digits
/// of n (lsd first): an even first digit is NonZero; otherwise the parity
/// of the first even-digit block decides. Never returns Unknown.
///
/// When the even block runs to the end of the digit string (possible only
/// for 2d >= 4) the removal chain bottoms out at a single digit instead of
/// a two-odd-digit number, which inverts the block-parity rule; n = 1 is
/// the terminal. Both ends are handled here and verified exhaustively
/// against the engine.
ZeroVerdict characterize_1_2d(std::uint64_t n, std::uint32_t d);

/// Zero characterization for a G_{1,2d} recursion whose first N-1 values
/// were overridden arbitrarily (misere play, or block values of G_{a,2d}).
/// Thresholds are the literal ones: 2dN for even n, 4d^2*N-2d+1 for the
/// two-odd residues, 4dN+1 before digit removals apply; prefix_table must
/// cover 1..4d^2*N. Below the thresholds the verdict is Unknown.
/// threshold_scale multiplies the thresholds for empirical probing; the
/// table-lookup cutoff is not scaled.
ZeroVerdict characterize_perturbed(std::uint64_t n, std::uint32_t d, std::uint64_t N,
                                   const SgTable& prefix_table, double threshold_scale = 1.0);

/// Zero characterization of SG_{a,2d}(m) for a whose prime factors all
/// divide 2d, via the block subsequence SG(a*n). threshold_scale multiplies
/// every threshold (1.0 = the literal ones; the literal bounds are known to
/// be optimistic by a small margin right at the boundary).
ZeroVerdict characterize_a_2d(std::uint64_t m, std::uint64_t a, std::uint32_t d,
                              const SgTable& prefix_table, double threshold_scale = 1.0);

struct MismatchReport {
    std::vector<std::uint64_t> mismatches;  // capped
    std::uint64_t total_mismatches = 0;
    std::uint64_t unknown_count = 0;
    std::uint64_t checked = 0;
};

using ZeroOracle = std::function<ZeroVerdict(std::uint64_t)>;

/// Sweep 1..n_max comparing oracle verdicts against the engine table.
/// Unknown verdicts are skipped and counted. The mismatch list is capped
/// (default 100) but total_mismatches counts everything. With workers > 1
/// the range is partitioned; reports merge deterministically by index.
MismatchReport verify_characterization(const SgTable& table, std::uint64_t n_max,
                                       const ZeroOracle& oracle, std::size_t cap = 100,
                                       unsigned workers = 1);

}  // namespace sdg
