#pragma once

#include <stdexcept>
#include <string>

namespace dmwe {

enum class Err {
    argument,            // malformed input (parse errors, null arguments, bad flags)
    index_range,         // row index out of [0, 2^m) or duplicated
    not_decreasing,      // monomial set not downward closed (strict mode)
    non_divisor,         // monomial division with a non-divisor
    bad_pair,            // pair does not meet the degree/gcd conditions
    row_not_max_degree,  // core row set requested for a non maximum-degree row
    not_coprime,         // collision degree needs gcd(f,g)=1
    not_degree_two,      // collision degree needs deg(f)=deg(g)=2
    too_large,           // exhaustive computation exceeds the configured caps
    overflow,            // exact count does not fit in 128 bits
    unsupported,         // r = m codes have no defined 1.5*wmin count
    mismatch,            // verification found a formula/oracle disagreement
    io,                  // file handling
};

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

}  // namespace dmwe
