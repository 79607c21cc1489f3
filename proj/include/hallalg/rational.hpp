#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hallalg/errors.hpp"

namespace hallalg::exact {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i64 narrow_i128(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw overflow_error("exact integer arithmetic exceeded 64 bits");
    return static_cast<i64>(v);
}

inline i64 checked_add(i64 a, i64 b) { return narrow_i128(i128(a) + i128(b)); }
inline i64 checked_sub(i64 a, i64 b) { return narrow_i128(i128(a) - i128(b)); }
inline i64 checked_mul(i64 a, i64 b) { return narrow_i128(i128(a) * i128(b)); }

// checked a^e over the integers
inline i64 checked_pow(i64 a, unsigned e) {
    i64 r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, a);
    return r;
}

// Exact rational number on 64-bit numerator/denominator, always reduced,
// denominator > 0.  Intermediate products use 128 bits; anything that does
// not reduce back into 64 bits raises overflow_error.
class Rat {
  public:
    Rat() = default;
    Rat(i64 n) : num_(n) {}
    Rat(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw precondition_error("division by zero rational");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "7", "-3/4"
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "n" or "n/d"; throws schema_error on anything else.
    static Rat parse(const std::string& s);

  private:
    static Rat make(i128 n, i128 d) {
        if (d == 0) throw precondition_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = narrow_i128(n);
        r.den_ = narrow_i128(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() { *this = make(num_, den_); }

    i64 num_ = 0;
    i64 den_ = 1;
};

}  // namespace hallalg::exact
