#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdg {

/// A Sprague-Grundy value. Games with one subtraction and one division
/// move have out-degree at most 2, so values never exceed 2.
using SgValue = std::uint8_t;

/// Thrown for invalid game parameters, malformed input files and the like.
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// mex: smallest non-negative integer not present in the set.
unsigned mex(std::span<const unsigned> values);
unsigned mex(std::initializer_list<unsigned> values);

/// Behavior of the subtraction move when n - a would fall below 1.
///
/// The published SG sequence for the (a=2, b=2) game is reproducible only
/// if the out-of-range subtraction child contributes the value 1 to the
/// mex set, so VirtualValue{1} is the default. SubtractDisallowed drops
/// the move instead (useful for sensitivity experiments).
struct Boundary {
    enum class Kind { VirtualValue, SubtractDisallowed };
    Kind kind = Kind::VirtualValue;
    SgValue virtual_value = 1;

    static Boundary virtual_one() { return {}; }
    static Boundary subtract_disallowed() { return {Kind::SubtractDisallowed, 0}; }
    bool operator==(const Boundary&) const = default;
};

/// Parameters of one game family G_{a,b}(n): subtract a, or divide by b
/// rounding up. Optional overrides fix the SG values of indices 1..k
/// before the recursion takes over (misere play is overrides = {1 -> 1}).
struct GameSpec {
    std::uint64_t a = 1;
    std::uint64_t b = 2;
    Boundary boundary{};
    std::vector<SgValue> overrides;  // values for indices 1..overrides.size()

    bool operator==(const GameSpec&) const = default;
};

/// Dense 1-based table of SG values for one GameSpec. Values are stored as
/// single bytes; a fully built table is immutable and safe to share across
/// threads.
class SgTable {
  public:
    SgTable(GameSpec spec, std::uint64_t n_max);

    SgValue value(std::uint64_t n) const {
        if (n < 1 || n > n_max_) {
            throw std::out_of_range("SgTable: index " + std::to_string(n) +
                                    " outside 1.." + std::to_string(n_max_));
        }
        return values_[n];
    }
    bool is_zero(std::uint64_t n) const { return value(n) == 0; }

    std::uint64_t n_max() const { return n_max_; }
    const GameSpec& spec() const { return spec_; }
    /// View of values at indices 1..n_max (element 0 of the span is index 1).
    std::span<const SgValue> values() const { return {values_.data() + 1, n_max_}; }

  private:
    GameSpec spec_;
    std::uint64_t n_max_;
    std::vector<SgValue> values_;  // values_[0] unused
};

enum class Outcome { FirstPlayerWin, FirstPlayerLoss };
enum class MoveKind { Subtract, Divide };

/// Win iff the SG value is non-zero.
Outcome outcome(const SgTable& table, std::uint64_t n);

/// A legal move to a child of SG value 0, Subtract preferred on ties;
/// nullopt for losing positions and for the terminal index 1.
std::optional<MoveKind> best_move(const SgTable& table, std::uint64_t n);

inline std::uint64_t ceil_div(std::uint64_t n, std::uint64_t b) {
    return (n + b - 1) / b;
}

}  // namespace sdg
