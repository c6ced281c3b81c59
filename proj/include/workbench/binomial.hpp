#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace workbench {

using bigint = boost::multiprecision::cpp_int;

/// Exact C(n,k); zero when k < 0 or k > n (the convention C(m,a)=0 for m<a).
inline bigint binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// C(n,k) in 64 bits for small arguments (callers guarantee no overflow).
inline std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return r;
}

/// Generalized binomial C(x,h) for real x, falling-factorial form:
/// x(x-1)...(x-h+1)/h!.
inline double binom_real(double x, int h) {
    if (h < 0) return 0.0;
    double num = 1.0, den = 1.0;
    for (int i = 0; i < h; ++i) {
        num *= (x - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace workbench
