#include "sdg/holding.hpp"

#include <numeric>

namespace sdg {

std::uint64_t coprime_part(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw ConfigError("coprime_part: need a, b >= 1");
    std::uint64_t r = a;
    for (;;) {
        const std::uint64_t g = std::gcd(r, b);
        if (g == 1) return r;
        r /= g;
    }
}

std::vector<std::uint64_t> g_sequence(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw ConfigError("g_sequence: need a, b >= 1");
    std::vector<std::uint64_t> gs;
    std::uint64_t r = a;
    for (;;) {
        const std::uint64_t g = std::gcd(r, b);
        if (g == 1) return gs;
        gs.push_back(g);
        r /= g;
    }
}

namespace {

std::uint64_t mul_checked(std::uint64_t x, std::uint64_t y) {
    if (y != 0 && x > UINT64_MAX / y) throw ConfigError("holding_bound: overflow");
    return x * y;
}

}  // namespace

HoldingBounds holding_bound(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 2) throw ConfigError("holding_bound: need a >= 1, b >= 2");
    std::uint64_t rough = a;
    for (std::uint64_t i = 0; i < a; ++i) rough = mul_checked(rough, b);

    if (b % 2 != 0) return {std::nullopt, rough};

    const std::uint64_t d = b / 2;
    const auto gs = g_sequence(a, b);
    std::uint64_t series = 1, pw = 1, prod = 1;
    for (std::uint64_t g : gs) {
        pw = mul_checked(pw, b);
        prod = mul_checked(prod, g);
        series += mul_checked(pw, prod);
    }
    return {mul_checked(4 * d * d + 2 * d + 2, series), rough};
}

std::optional<std::uint64_t> detect_holding(const SgTable& table, std::uint64_t s,
                                            std::uint64_t min_blocks) {
    if (s < 1) throw ConfigError("detect_holding: need s >= 1");
    if (table.n_max() < 3 * s * table.spec().b) {
        throw ConfigError("detect_holding: table too short (need 3*s*b indices)");
    }
    const std::uint64_t num_blocks = table.n_max() / s;
    std::uint64_t last_bad = 0;
    for (std::uint64_t k = 1; k <= num_blocks; ++k) {
        const std::uint64_t start = (k - 1) * s + 1;
        const SgValue v = table.value(start);
        for (std::uint64_t i = 1; i < s; ++i) {
            if (table.value(start + i) != v) {
                last_bad = k;
                break;
            }
        }
    }
    const std::uint64_t onset_block = last_bad + 1;
    if (num_blocks < onset_block || num_blocks - onset_block + 1 < min_blocks) {
        return std::nullopt;
    }
    return (onset_block - 1) * s + 1;
}

PersistenceResult verify_persistence(const SgTable& table, std::uint64_t g) {
    if (g < 1) throw ConfigError("verify_persistence: need g >= 1");
    const std::uint64_t a = table.spec().a;
    if (std::gcd(a, table.spec().b) % g != 0) {
        throw ConfigError("verify_persistence: g must divide gcd(a, b)");
    }
    if (g == 1) return {};  // singleton blocks
    for (std::uint64_t k = 1; k * g + a <= table.n_max(); ++k) {
        const std::uint64_t start = k * g - g + 1;
        bool constant = true;
        for (std::uint64_t i = 1; i < g && constant; ++i) {
            constant = table.value(start + i) == table.value(start);
        }
        if (!constant) continue;
        const std::uint64_t next = start + a;
        for (std::uint64_t i = 1; i < g; ++i) {
            if (table.value(next + i) != table.value(next)) return {false, next};
        }
    }
    return {};
}

std::vector<SgValue> block_values(const SgTable& table, std::uint64_t a) {
    if (a < 1) throw ConfigError("block_values: need a >= 1");
    std::vector<SgValue> out;
    out.reserve(table.n_max() / a);
    for (std::uint64_t n = a; n <= table.n_max(); n += a) out.push_back(table.value(n));
    return out;
}

HoldingProfile holding_profile(const SgTable& table, std::uint64_t min_blocks) {
    HoldingProfile p;
    p.a = table.spec().a;
    p.b = table.spec().b;
    p.g_sequence = g_sequence(p.a, p.b);
    p.a_prime = coprime_part(p.a, p.b);
    p.s = p.a / p.a_prime;
    const HoldingBounds bounds = holding_bound(p.a, p.b);
    p.rough_bound = bounds.rough;
    p.exact_bound = bounds.exact;
    try {
        p.onset_observed = detect_holding(table, p.s, min_blocks);
    } catch (const ConfigError&) {
        p.onset_observed = std::nullopt;  // table too short to judge
    }
    return p;
}

}  // namespace sdg
