#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

/// v -> (3 - v) mod 3: fixes 0, swaps 1 and 2. An involution.
inline SgValue sg_star(SgValue v) { return static_cast<SgValue>((3 - v) % 3); }

/// Base-2d coefficient view of an index after Alternating-Property
/// normalization: rep = R + 2d*c_1 + (2d)^2*c_2 + ... with R in {0,1}.
/// Even n round up to the next multiple of 2d, odd n round down to the
/// next index congruent 1 mod 2d; both share the original SG value
/// (valid for n > 2d; smaller indices sit in the terminal floor).
struct CoeffView {
    std::uint32_t d = 1;
    std::uint8_t R = 0;
    std::uint64_t rep = 0;
    std::vector<std::uint32_t> digits;  // digits[0] = R, digits[i] = c_i

    /// c_i (1-based), implicit 0 beyond the stored digits.
    std::uint32_t coeff(std::size_t i) const {
        return i < digits.size() ? digits[i] : 0;
    }
    static CoeffView normalize(std::uint64_t n, std::uint32_t d);
};

/// Case of the reduction tables: 1 = (R=1, c1 odd), 2 = (R=1, c1 even),
/// 3 = (R=0, c1 odd), 4 = (R=0, c1 even).
int classify_case(std::uint64_t n, std::uint32_t d);

enum class RuleKind { ToSG, ToZero };

/// One dispatch of the reduction tables on an index.
struct RuleStep {
    enum class Type { Terminal, Zero, Reduce };
    Type type = Type::Terminal;
    std::string id;             // "C1", "R1".."R5.4", "C3-1".."C3-13", "C4-1".."C4-15"
    std::uint64_t reduced = 0;  // Reduce only
    int declared_shift = 0;
    bool carry = false;  // Case 4 c_2' normalization carried into higher digits
};

/// The unique matching rule for n, or Terminal for the finitely many small
/// indices where no rule strictly reduces (all below (2d)^3 in practice).
RuleStep apply_rule(std::uint64_t n, std::uint32_t d);

/// Number of rule guards matching n within its case table; 1 everywhere
/// except implementation bugs (asserted by verify_rules).
int guard_match_count(std::uint64_t n, std::uint32_t d);

struct ChainEntry {
    std::string rule;
    std::uint64_t index;  // the reduced index this step produced (0 for a ToZero step)
};

struct Chain {
    std::uint64_t start = 0;
    std::vector<ChainEntry> steps;
    bool to_zero = false;
    std::uint64_t terminal = 0;  // final index, meaningful when !to_zero
};

/// Iterate apply_rule until the chain bottoms out. Strictly decreasing.
Chain reduce_to_base(std::uint64_t n, std::uint32_t d);

/// Resolve a chain to an SG value: 0 for ToZero chains, otherwise a lookup
/// of the terminal index in a (small) engine table.
SgValue chain_value(const Chain& chain, const SgTable& base_table);

struct RuleStat {
    std::string id;
    int case_no = 0;
    RuleKind kind = RuleKind::ToSG;
    int declared_shift = 0;
    std::uint64_t fires = 0;
    bool satisfiable = false;                // witness representative reachable in range
    std::optional<std::uint64_t> witness;    // smallest witness rep found by search
};

struct RuleReport {
    std::uint32_t d = 1;
    std::uint64_t n_max = 0;
    std::vector<RuleStat> rules;
    std::uint64_t checked = 0;
    std::uint64_t soundness_failures = 0;    // SG(n) != SG(r), or != 0 on a ToZero rule
    std::uint64_t shift_failures = 0;        // declared shift != observed digit loss
    std::uint64_t descent_failures = 0;      // reduced index not strictly smaller
    std::uint64_t exclusivity_failures = 0;  // more than one guard matched
    std::uint64_t uncovered = 0;             // terminal index with >= 9 base-2d digits
    std::uint64_t carry_fires = 0;
    std::uint64_t terminal_count = 0;
    std::uint64_t terminal_max = 0;
    std::uint64_t satisfiable_unfired = 0;   // satisfiable rules that never fired
    // Intermediate claims: first-odd-coefficient parity decides which side
    // of the mex vanishes; all-even case-3 indices have exactly one zero
    // side; the shift-difference-1 pair construction reproduces rows 9-12.
    std::uint64_t zeroprop_checked = 0, zeroprop_failures = 0;
    std::uint64_t alleven_checked = 0, alleven_failures = 0;
    std::uint64_t pair_checked = 0, pair_failures = 0;
    std::vector<std::uint64_t> failure_samples;  // capped at 100

    bool ok() const {
        return soundness_failures == 0 && shift_failures == 0 && descent_failures == 0 &&
               exclusivity_failures == 0 && uncovered == 0 && satisfiable_unfired == 0 &&
               zeroprop_failures == 0 && alleven_failures == 0 && pair_failures == 0;
    }
};

/// Exhaustive verification of every table row against an engine table for
/// G_{1,2d} (normal play): soundness, declared shifts, strict descent,
/// guard exclusivity and coverage, fire counts, and the paper's
/// intermediate claims. The table must cover n_max.
RuleReport verify_rules(const SgTable& table, std::uint64_t n_max, unsigned workers = 1);

}  // namespace sdg
