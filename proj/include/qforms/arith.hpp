#pragma once

// Overflow-checked 64-bit kernels shared by all modules.

#include <cmath>
#include <cstdint>
#include <numeric>

#include "qforms/errors.hpp"

namespace qforms {

using i128 = __int128;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError("128-bit intermediate does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

/// Least nonnegative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mod(i128 a, std::int64_t m)
{
    i128 r = a % m;
    return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return mod(static_cast<i128>(a) * b, m);
}

inline std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t m)
{
    std::int64_t result = 1 % m;
    base = mod(base, m);
    for (; e; e >>= 1) {
        if (e & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
    }
    return result;
}

/// floor(sqrt(v)) for v >= 0, exact over the whole int64 range.
inline std::int64_t isqrt(std::int64_t v)
{
    if (v < 0)
        throw std::domain_error("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<i128>(r) * r > v)
        --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

/// Returns true and stores the root when v is a perfect square.
inline bool is_square(std::int64_t v, std::int64_t & root)
{
    if (v < 0)
        return false;
    root = isqrt(v);
    return static_cast<i128>(root) * root == v;
}

struct ExtGcd
{
    std::int64_t g, x, y; // g = a*x + b*y, g >= 0
};

inline ExtGcd ext_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0)
        return { -a, -x0, -y0 };
    return { a, x0, y0 };
}

} // namespace qforms
