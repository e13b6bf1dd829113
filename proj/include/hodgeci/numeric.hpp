#pragma once

#include <cstdint>

#include "hodgeci/errors.hpp"

namespace hodgeci {

// All dimensions and characteristic numbers are exact 64-bit integers with
// overflow trapped; no floating point exists anywhere in the library.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/* Exact binomial coefficient; the running product is divisible at every step. */
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace hodgeci
