#include "sdg/automatic.hpp"

#include <map>
#include <string>

#include "sdg/holding.hpp"

namespace sdg {

namespace {

// Prefix signature of the subsequence n -> S(b^e * n + r), n = 1..L,
// where S(i) = table[a*i].
std::string signature(const SgTable& table, std::uint64_t a, std::uint64_t scale,
                      std::uint64_t r, std::size_t L) {
    std::string sig(L, '\0');
    for (std::size_t n = 1; n <= L; ++n) {
        sig[n - 1] = static_cast<char>(table.value(a * (scale * n + r)));
    }
    return sig;
}

void check_block_hypothesis(const SgTable& table) {
    const GameSpec& spec = table.spec();
    if (spec.b % 2 != 0) throw ConfigError("automaticity machinery requires even b");
    if (spec.a > 1 && coprime_part(spec.a, spec.b) != 1) {
        throw ConfigError("block subsequence requires every prime factor of a to divide b");
    }
}

}  // namespace

KernelReport kernel_report(const SgTable& table, unsigned e_max, std::size_t prefix_len) {
    check_block_hypothesis(table);
    const std::uint64_t a = table.spec().a;
    const std::uint64_t b = table.spec().b;
    if (prefix_len < 1) throw ConfigError("kernel_report: prefix_len must be >= 1");

    KernelReport report;
    report.a = a;
    report.b = b;
    report.e_max = e_max;
    report.prefix_len = prefix_len;

    std::uint64_t scale = 1;
    for (unsigned e = 0; e <= e_max; ++e) {
        const std::uint64_t top = a * (scale * prefix_len + (scale - 1));
        if (top > table.n_max()) {
            throw ConfigError("kernel_report: table too small for depth " + std::to_string(e) +
                              " (needs " + std::to_string(top) + " values)");
        }
        std::map<std::string, bool> seen;
        for (std::uint64_t r = 0; r < scale; ++r) {
            seen[signature(table, a, scale, r, prefix_len)] = true;
        }
        report.depth_counts.push_back(seen.size());
        scale *= b;
    }
    report.stabilized = e_max >= 1 && report.depth_counts[e_max] == report.depth_counts[e_max - 1];
    return report;
}

Dfao build_dfao(const SgTable& table, std::size_t prefix_len, std::uint64_t validation_bound) {
    check_block_hypothesis(table);
    const std::uint64_t a = table.spec().a;
    const std::uint64_t b = table.spec().b;
    if (validation_bound * a > table.n_max()) {
        throw ConfigError("build_dfao: table too small for the validation bound");
    }

    struct Node {
        std::uint64_t scale;  // b^e
        std::uint64_t r;
    };
    Dfao dfao;
    dfao.base = b;
    std::map<std::string, std::uint32_t> classes;
    std::vector<Node> repr;
    std::vector<bool> has_output;

    auto intern = [&](std::uint64_t scale, std::uint64_t r) -> std::uint32_t {
        const std::uint64_t top = a * (scale * prefix_len + r);
        if (top > table.n_max()) {
            throw ConfigError("build_dfao: table too small to close the kernel (needs " +
                              std::to_string(top) + " values); kernel may not have stabilized");
        }
        const std::string sig = signature(table, a, scale, r, prefix_len);
        auto [it, inserted] = classes.emplace(sig, static_cast<std::uint32_t>(repr.size()));
        if (inserted) {
            repr.push_back({scale, r});
            dfao.outputs.push_back(0);
            has_output.push_back(false);
        }
        const std::uint32_t id = it->second;
        if (r >= 1) {
            const SgValue out = table.value(a * r);
            if (!has_output[id]) {
                dfao.outputs[id] = out;
                has_output[id] = true;
            } else if (dfao.outputs[id] != out) {
                throw ConfigError("build_dfao: merged states disagree on output at index " +
                                  std::to_string(r) + "; increase the prefix length");
            }
        }
        return id;
    };

    dfao.start = intern(1, 0);
    for (std::size_t q = 0; q < repr.size(); ++q) {  // repr grows during the loop
        const Node node = repr[q];
        std::vector<std::uint32_t> row;
        row.reserve(b);
        for (std::uint64_t digit = 0; digit < b; ++digit) {
            row.push_back(intern(node.scale * b, node.r + digit * node.scale));
        }
        dfao.transitions.push_back(std::move(row));
    }

    for (std::uint64_t n = 1; n <= validation_bound; ++n) {
        if (dfao.eval(n) != table.value(a * n)) {
            throw ConfigError("build_dfao: validation mismatch at n = " + std::to_string(n));
        }
    }
    dfao.validated_to = validation_bound;
    return dfao;
}

}  // namespace sdg
