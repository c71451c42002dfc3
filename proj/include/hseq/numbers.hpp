#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hseq {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division for a positive divisor.
constexpr Int floor_div(Int a, Int b) {
    Int q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

constexpr Int mod_floor(Int a, Int b) { return a - b * floor_div(a, b); }

/// Exact binomial coefficient; zero when k < 0 or k > n (n >= 0).
inline BigInt binomial(Int n, Int k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (Int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i)
    }
    return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace hseq
