#include "sdg/engine.hpp"

#include <algorithm>

namespace sdg {

unsigned mex(std::span<const unsigned> values) {
    for (unsigned k = 0;; ++k) {
        if (std::find(values.begin(), values.end(), k) == values.end()) return k;
    }
}

unsigned mex(std::initializer_list<unsigned> values) {
    return mex(std::span<const unsigned>(values.begin(), values.size()));
}

namespace {

void validate(const GameSpec& spec, std::uint64_t n_max) {
    if (spec.a < 1) throw ConfigError("GameSpec: a must be >= 1");
    if (spec.b < 2) throw ConfigError("GameSpec: b must be >= 2");
    if (n_max < 1) throw ConfigError("SgTable: n_max must be >= 1");
    if (spec.overrides.size() > n_max) {
        throw ConfigError("SgTable: override index " +
                          std::to_string(spec.overrides.size()) + " exceeds n_max " +
                          std::to_string(n_max));
    }
    for (SgValue v : spec.overrides) {
        if (v > 2) throw ConfigError("GameSpec: override values must lie in {0,1,2}");
    }
}

inline SgValue mex_pair(SgValue x, SgValue y) {
    // mex of a two-element multiset over {0,1,2}.
    if (x != 0 && y != 0) return 0;
    // 0 is present; answer is the smallest value missing from {x,y}.
    if (x == 1 || y == 1) return 2;
    return 1;
}

}  // namespace

SgTable::SgTable(GameSpec spec, std::uint64_t n_max)
    : spec_(std::move(spec)), n_max_(n_max), values_(n_max + 1, 0) {
    validate(spec_, n_max_);
    const std::uint64_t a = spec_.a;
    const std::uint64_t b = spec_.b;
    const std::uint64_t seeded = spec_.overrides.size();
    for (std::uint64_t i = 0; i < seeded; ++i) values_[i + 1] = spec_.overrides[i];

    for (std::uint64_t n = std::max<std::uint64_t>(seeded + 1, 1); n <= n_max_; ++n) {
        if (n == 1) continue;  // terminal convention: SG(1) = 0
        const SgValue div_child = values_[ceil_div(n, b)];
        if (n > a) {
            values_[n] = mex_pair(values_[n - a], div_child);
        } else if (spec_.boundary.kind == Boundary::Kind::VirtualValue) {
            values_[n] = mex_pair(spec_.boundary.virtual_value, div_child);
        } else {
            values_[n] = div_child == 0 ? 1 : 0;  // mex of the singleton
        }
    }
}

Outcome outcome(const SgTable& table, std::uint64_t n) {
    return table.value(n) != 0 ? Outcome::FirstPlayerWin : Outcome::FirstPlayerLoss;
}

std::optional<MoveKind> best_move(const SgTable& table, std::uint64_t n) {
    if (n == 1 || table.value(n) == 0) return std::nullopt;
    const auto& spec = table.spec();
    if (n > spec.a && table.value(n - spec.a) == 0) return MoveKind::Subtract;
    if (table.value(ceil_div(n, spec.b)) == 0) return MoveKind::Divide;
    // Possible only under exotic boundary conventions (virtual value 0):
    // the mex can be made non-zero by the phantom child alone.
    return std::nullopt;
}

}  // namespace sdg
