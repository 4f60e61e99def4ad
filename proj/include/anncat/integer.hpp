#pragma once

// Exact integer types used by the linear-algebra layer.
//
// BigInt is the default scalar for unimodular transforms; CheckedInt64 is a
// fixed-width alternative that throws instead of wrapping, so algorithms can
// be instantiated on either and overflow never goes unnoticed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace anncat {

using BigInt = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class CheckedInt64 {
public:
    constexpr CheckedInt64() = default;
    constexpr CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design of the scalar concept

    [[nodiscard]] constexpr std::int64_t value() const { return v_; }

    friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 addition overflow");
        return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 subtraction overflow");
        return r;
    }
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 multiplication overflow");
        return r;
    }
    friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
        if (b.v_ == 0) throw std::domain_error("division by zero");
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
            throw OverflowError("int64 division overflow");
        return a.v_ / b.v_;
    }
    friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
        if (b.v_ == 0) throw std::domain_error("division by zero");
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    CheckedInt64 operator-() const { return CheckedInt64(0) - *this; }
    CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
    CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
    CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }

    friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;
    friend std::ostream& operator<<(std::ostream& os, CheckedInt64 x) { return os << x.v_; }

private:
    std::int64_t v_ = 0;
};

// Floor-style helpers shared by every scalar type.

template <class T>
T abs_value(const T& x) {
    return x < T(0) ? T(0) - x : x;
}

// Remainder in [0, |m|).
template <class T>
T mod_floor(const T& a, const T& m) {
    T mm = abs_value(m);
    T r = a % mm;
    if (r < T(0)) r = r + mm;
    return r;
}

template <class T>
T gcd_value(T a, T b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != T(0)) {
        T r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <class T>
T lcm_value(const T& a, const T& b) {
    if (a == T(0) || b == T(0)) return T(0);
    return abs_value(a / gcd_value(a, b) * b);
}

// Extended gcd: returns g = s*a + t*b with g >= 0.
template <class T>
struct XgcdResult {
    T g, s, t;
};

template <class T>
XgcdResult<T> xgcd(const T& a, const T& b) {
    T old_r = a, r = b;
    T old_s = T(1), s = T(0);
    T old_t = T(0), t = T(1);
    while (r != T(0)) {
        T q = old_r / r;
        T tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < T(0)) {
        old_r = T(0) - old_r;
        old_s = T(0) - old_s;
        old_t = T(0) - old_t;
    }
    return {old_r, old_s, old_t};
}

inline std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("integer does not fit in int64: " + x.str());
    return x.convert_to<std::int64_t>();
}
inline std::int64_t to_int64(CheckedInt64 x) { return x.value(); }
inline std::int64_t to_int64(std::int64_t x) { return x; }

}  // namespace anncat
