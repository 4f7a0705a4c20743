#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kronforge/error.hpp"

namespace kronforge {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Exact quotient; a non-zero remainder is an engine bug, not a user error.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what)
{
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        fail(ErrorKind::internal, std::string("inexact division in ") + what);
    return q;
}

/// Sum of integer products that stays in 128-bit arithmetic until an
/// operation would overflow, then continues in arbitrary precision.
class ExactSum {
public:
    /// Adds a * b * c * d.
    void add_product(Int128 a, Int128 b, Int128 c = 1, Int128 d = 1)
    {
        if (!wide_) {
            Int128 p;
            if (!__builtin_mul_overflow(a, b, &p) && !__builtin_mul_overflow(p, c, &p) &&
                !__builtin_mul_overflow(p, d, &p) && !__builtin_add_overflow(narrow_, p, &p)) {
                narrow_ = p;
                return;
            }
            widen();
        }
        wide_sum_ += from128(a) * from128(b) * from128(c) * from128(d);
    }

    BigInt value() const { return wide_ ? wide_sum_ : from128(narrow_); }
    bool is_narrow() const { return !wide_; }
    Int128 narrow_value() const { return narrow_; }
    bool equals(Int128 v) const { return wide_ ? wide_sum_ == from128(v) : narrow_ == v; }

    static BigInt from128(Int128 v)
    {
        const bool neg = v < 0;
        UInt128 u = neg ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return neg ? BigInt(-r) : r;
    }

private:
    void widen()
    {
        wide_ = true;
        wide_sum_ = from128(narrow_);
    }

    bool wide_ = false;
    Int128 narrow_ = 0;
    BigInt wide_sum_;
};

/// Narrowing for values known to fit, such as class sizes at n <= 21.
inline Int128 to_int128(const BigInt& v)
{
    if (boost::multiprecision::msb(boost::multiprecision::abs(v) + 1) >= 126)
        fail(ErrorKind::internal, "value exceeds 128-bit range");
    const bool neg = v < 0;
    BigInt a = neg ? BigInt(-v) : v;
    const auto hi = static_cast<std::uint64_t>(a >> 64);
    const auto lo = static_cast<std::uint64_t>(a & BigInt(~std::uint64_t{0}));
    Int128 r = (static_cast<Int128>(hi) << 64) | lo;
    return neg ? -r : r;
}

}  // namespace kronforge
