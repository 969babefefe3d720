#include "sdg/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "sdg/digits.hpp"
#include "sdg/holding.hpp"

namespace sdg {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw ConfigError("threshold exceeds 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t scaled(std::uint64_t v, double scale) {
    if (scale == 1.0) return v;
    long double s = static_cast<long double>(v) * scale;
    if (s < 1.0L) return 1;
    return static_cast<std::uint64_t>(s);
}

}  // namespace

ZeroVerdict residue_rule(std::uint64_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw ConfigError("residue_rule: need n >= 1, d >= 1");
    const std::uint64_t l = n % (4ull * d);
    if (l % 2 == 0) return {Verdict::NonZero, "residue-even", 0};
    if (l > 2ull * d) return {Verdict::Zero, "residue-two-odd", 0};
    return {Verdict::Unknown, "residue-unknown", 0};
}

ZeroVerdict characterize_1_2d(std::uint64_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw ConfigError("characterize_1_2d: need n >= 1, d >= 1");
    const DigitString ds = to_digits(n, 2ull * d);
    if (ds.digits[0] % 2 == 0) return {Verdict::NonZero, "even-first", 0};
    if (n == 1) return {Verdict::Zero, "terminal", 0};
    const auto k = static_cast<std::uint32_t>(first_even_block_length(ds));
    if (1 + k < ds.digits.size()) {
        // o e^k o...: the removal chain ends at a two-odd-digit loss.
        return {k % 2 == 0 ? Verdict::Zero : Verdict::NonZero, "oeko", k};
    }
    // o e^k with the block running to the end: the chain ends at a single
    // digit q >= 3, which is a win, so the parity flips.
    return {k % 2 == 1 ? Verdict::Zero : Verdict::NonZero, "trailing-even", k};
}

ZeroVerdict characterize_perturbed(std::uint64_t n, std::uint32_t d, std::uint64_t N,
                                   const SgTable& prefix_table, double threshold_scale) {
    if (n < 1 || d < 1 || N < 1) throw ConfigError("characterize_perturbed: bad arguments");
    const std::uint64_t b = 2ull * d;
    const std::uint64_t table_need = 4ull * d * d * N;
    if (prefix_table.n_max() < table_need) {
        throw ConfigError("characterize_perturbed: prefix table must cover 1.." +
                          std::to_string(table_need));
    }
    const std::uint64_t l = n % (4ull * d);
    if (l % 2 == 0) {
        if (n >= scaled(b * N, threshold_scale)) return {Verdict::NonZero, "even", 0};
        return {Verdict::Unknown, "below-threshold", 0};
    }
    if (l > b) {
        if (n >= scaled(4ull * d * d * N - b + 1, threshold_scale))
            return {Verdict::Zero, "two-odd", 0};
        return {Verdict::Unknown, "below-threshold", 0};
    }
    // l in {1, 3, ..., 2d-1}: remove second digits while they stay even and
    // the value stays >= 2dN+1, then look the rest up (or use the two-odd
    // rule when the chain stopped past the precomputed region).
    if (n < scaled(2ull * b * N + 1, threshold_scale)) {  // 4dN + 1
        return {Verdict::Unknown, "below-threshold", 0};
    }
    const std::uint64_t keep_above = scaled(b * N + 1, threshold_scale);
    std::uint64_t cur = n;
    std::uint32_t k = 0;
    DigitString ds = to_digits(cur, b);
    while (ds.digits.size() >= 2 && ds.digits[1] % 2 == 0) {
        const std::uint64_t next = from_digits(remove_second_digit(ds));
        if (next < keep_above) break;
        cur = next;
        ds = to_digits(cur, b);
        ++k;
    }
    Verdict base;
    if (cur > table_need) {
        base = Verdict::Zero;  // stopped on an odd second digit, two-odd regime
    } else {
        base = prefix_table.value(cur) == 0 ? Verdict::Zero : Verdict::NonZero;
    }
    return {k % 2 == 0 ? base : flip(base), "oek-chain", k};
}

ZeroVerdict characterize_a_2d(std::uint64_t m, std::uint64_t a, std::uint32_t d,
                              const SgTable& prefix_table, double threshold_scale) {
    if (m < 1 || a < 1 || d < 1) throw ConfigError("characterize_a_2d: bad arguments");
    const std::uint64_t b = 2ull * d;
    if (coprime_part(a, b) != 1) {
        throw ConfigError("characterize_a_2d: every prime factor of a must divide 2d");
    }
    const unsigned ai = static_cast<unsigned>(a);
    const std::uint64_t table_need = a * checked_pow(b, ai + 2);
    if (prefix_table.n_max() < table_need) {
        throw ConfigError("characterize_a_2d: prefix table must cover 1.." +
                          std::to_string(table_need));
    }
    if (m <= scaled(a * checked_pow(b, ai), threshold_scale)) {
        return {Verdict::Unknown, "below-holding", 0};
    }
    // Holding makes every index of a block share the block value SG(a*j).
    const std::uint64_t j = ceil_div(m, a);
    DigitString ds = to_digits(j, b);
    if (ds.digits[0] % 2 == 0) {
        if (j >= scaled(checked_pow(b, ai + 1), threshold_scale))
            return {Verdict::NonZero, "even-first", 0};
        return {Verdict::Unknown, "below-threshold", 0};
    }
    if (first_even_block_length(ds) == 0) {
        if (ds.digits.size() >= 2 && j >= scaled(checked_pow(b, ai + 2), threshold_scale))
            return {Verdict::Zero, "two-odd", 0};
        return {Verdict::Unknown, "below-threshold", 0};
    }
    // o e^k ...: successive second-digit removals; stop once the block is
    // consumed or the value drops under a*b^(a+2), whichever happens first.
    const std::uint64_t stop_below = scaled(table_need, threshold_scale);
    std::uint64_t cur = j;
    std::uint32_t k = 0;
    bool block_consumed = false;
    while (true) {
        if (!(ds.digits.size() >= 2 && ds.digits[1] % 2 == 0)) {
            block_consumed = true;
            break;
        }
        if (cur < stop_below) break;
        cur = from_digits(remove_second_digit(ds));
        ds = to_digits(cur, b);
        ++k;
    }
    Verdict base;
    if (block_consumed && cur >= scaled(checked_pow(b, ai + 2), threshold_scale)) {
        base = Verdict::Zero;  // two odd digits, closed form
    } else {
        if (a * cur > prefix_table.n_max()) return {Verdict::Unknown, "prefix-too-short", k};
        base = prefix_table.value(a * cur) == 0 ? Verdict::Zero : Verdict::NonZero;
    }
    return {k % 2 == 0 ? base : flip(base), "oek-chain", k};
}

MismatchReport verify_characterization(const SgTable& table, std::uint64_t n_max,
                                       const ZeroOracle& oracle, std::size_t cap,
                                       unsigned workers) {
    if (n_max > table.n_max()) throw ConfigError("verify_characterization: table too short");
    if (workers < 1) workers = 1;

    struct Local {
        std::vector<std::uint64_t> mismatches;
        std::uint64_t total = 0, unknown = 0, checked = 0;
    };
    auto run = [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
        for (std::uint64_t n = lo; n <= hi; ++n) {
            ++out.checked;
            const ZeroVerdict v = oracle(n);
            if (v.verdict == Verdict::Unknown) {
                ++out.unknown;
                continue;
            }
            const bool claim_zero = v.verdict == Verdict::Zero;
            if (claim_zero != (table.value(n) == 0)) {
                ++out.total;
                if (out.mismatches.size() < cap) out.mismatches.push_back(n);
            }
        }
    };

    std::vector<Local> locals(workers);
    if (workers == 1) {
        run(1, n_max, locals[0]);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (n_max + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = 1 + w * chunk;
            const std::uint64_t hi = std::min(n_max, lo + chunk - 1);
            if (lo > hi) break;
            threads.emplace_back([&, lo, hi, w] { run(lo, hi, locals[w]); });
        }
        for (auto& t : threads) t.join();
    }

    MismatchReport report;
    for (const Local& l : locals) {
        report.total_mismatches += l.total;
        report.unknown_count += l.unknown;
        report.checked += l.checked;
        for (std::uint64_t n : l.mismatches) {
            if (report.mismatches.size() < cap) report.mismatches.push_back(n);
        }
    }
    return report;
}

}  // namespace sdg
