#include "sdg/digits.hpp"

#include <limits>

namespace sdg {

DigitString to_digits(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw ConfigError("to_digits: base must be >= 2");
    DigitString ds{base, {}};
    while (n > 0) {
        ds.digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return ds;
}

std::uint64_t from_digits(const DigitString& ds) {
    if (ds.base < 2) throw ConfigError("from_digits: base must be >= 2");
    std::uint64_t n = 0;
    for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) {
        if (*it >= ds.base) throw ConfigError("from_digits: digit out of range");
        if (n > (std::numeric_limits<std::uint64_t>::max() - *it) / ds.base) {
            throw ConfigError("from_digits: value exceeds 64 bits");
        }
        n = n * ds.base + *it;
    }
    return n;
}

std::string parity_pattern(const DigitString& ds) {
    std::string s;
    s.reserve(ds.digits.size());
    for (auto d : ds.digits) s.push_back(d % 2 == 0 ? 'e' : 'o');
    return s;
}

DigitString remove_second_digit(const DigitString& ds) {
    if (ds.digits.size() < 2) throw ConfigError("remove_second_digit: need at least two digits");
    if (ds.digits[0] % 2 == 0) throw ConfigError("remove_second_digit: first digit must be odd");
    if (ds.digits[1] % 2 != 0) throw ConfigError("remove_second_digit: second digit must be even");
    if (ds.digits[1] == ds.base - 1) {
        throw ConfigError("remove_second_digit: second digit base-1 would carry");
    }
    DigitString out{ds.base, {}};
    out.digits.reserve(ds.digits.size() - 1);
    out.digits.push_back(ds.digits[0]);
    out.digits.insert(out.digits.end(), ds.digits.begin() + 2, ds.digits.end());
    return out;
}

std::size_t first_even_block_length(const DigitString& ds) {
    if (ds.digits.empty() || ds.digits[0] % 2 == 0) {
        throw ConfigError("first_even_block_length: first digit must be odd");
    }
    std::size_t k = 0;
    while (1 + k < ds.digits.size() && ds.digits[1 + k] % 2 == 0) ++k;
    return k;
}

std::string pretty_pattern(const DigitString& ds) {
    std::string raw = parity_pattern(ds);
    if (raw.empty() || raw[0] == 'e') return raw;
    std::size_t k = first_even_block_length(ds);
    std::string out;
    out.push_back('o');
    if (k > 0) out += "|" + raw.substr(1, k);
    if (1 + k < raw.size()) out += "|" + raw.substr(1 + k);
    return out;
}

}  // namespace sdg
