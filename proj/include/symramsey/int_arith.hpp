#pragma once

// Integer back-ends shared by all modules.
//
// Three representations are supported by the generic algorithms:
//   BigInt   - arbitrary precision, never overflows
//   int64_t  - checked, throws OverflowError
//   Int128   - checked, used where 64 bits are too tight for intermediate products

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "symramsey/error.hpp"

namespace symramsey {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Int128 = __int128;

namespace arith {

template <class T>
inline constexpr bool is_fixed_v = std::is_same_v<T, std::int64_t> || std::is_same_v<T, Int128>;

template <class T>
T add(const T& a, const T& b) {
    if constexpr (is_fixed_v<T>) {
        T r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError("integer overflow in addition");
        return r;
    } else {
        return a + b;
    }
}

template <class T>
T sub(const T& a, const T& b) {
    if constexpr (is_fixed_v<T>) {
        T r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowError("integer overflow in subtraction");
        return r;
    } else {
        return a - b;
    }
}

template <class T>
T mul(const T& a, const T& b) {
    if constexpr (is_fixed_v<T>) {
        T r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowError("integer overflow in multiplication");
        return r;
    } else {
        return a * b;
    }
}

/// Division that must be exact; a remainder indicates a broken invariant upstream.
template <class T>
T exact_div(const T& a, const T& b) {
    if (b == 0)
        throw DomainError("division by zero");
    if constexpr (is_fixed_v<T>) {
        if (b == -1)
            return sub(T{0}, a);
    }
    if (a % b != 0)
        throw DomainError("inexact division");
    return a / b;
}

template <class T>
T pow(const T& base, unsigned exp) {
    T result{1};
    for (unsigned i = 0; i < exp; ++i)
        result = mul(result, base);
    return result;
}

/// Narrow to int64_t, throwing when the value does not fit.
template <class T>
std::int64_t to_i64(const T& v) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return v;
    } else {
        if (v > T{INT64_MAX} || v < T{INT64_MIN})
            throw OverflowError("value does not fit in 64 bits");
        return static_cast<std::int64_t>(v);
    }
}

} // namespace arith

std::string to_string(Int128 v);

} // namespace symramsey
