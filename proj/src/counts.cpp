#include "dmwe/counts.hpp"

#include <algorithm>

#include "dmwe/errors.hpp"

namespace dmwe {

count_t pow2_checked(unsigned exponent) {
    if (exponent > 127)
        throw Error(Err::overflow,
                    "count 2^" + std::to_string(exponent) + " exceeds 128 bits");
    return count_t{1} << exponent;
}

count_t checked_add(count_t a, count_t b) {
    count_t s = a + b;
    if (s < a) throw Error(Err::overflow, "count sum exceeds 128 bits");
    return s;
}

std::string dec_string(count_t v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

count_t parse_count(std::string_view s) {
    if (s.empty()) throw Error(Err::argument, "empty count string");
    count_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error(Err::argument, "bad count digit in '" + std::string(s) + "'");
        count_t next = v * 10 + static_cast<unsigned>(c - '0');
        if (next / 10 != v) throw Error(Err::overflow, "count exceeds 128 bits");
        v = next;
    }
    return v;
}

double count_to_double(count_t v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    return static_cast<double>(hi) * 18446744073709551616.0 + static_cast<double>(lo);
}

}  // namespace dmwe
