#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; 0 for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

inline int mod_reduce(const BigInt& v, std::int64_t m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

}  // namespace zerosum
