// Exact 128-bit codeword counts with overflow diagnostics.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dmwe {

using count_t = unsigned __int128;

// 2^exponent, rejecting exponents that do not fit in 128 bits.
count_t pow2_checked(unsigned exponent);

// a + b, rejecting wraparound.
count_t checked_add(count_t a, count_t b);

std::string dec_string(count_t v);

// Parses a non-negative decimal string; rejects junk and values over 128 bits.
count_t parse_count(std::string_view s);

double count_to_double(count_t v);

}  // namespace dmwe
