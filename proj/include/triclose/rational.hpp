#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace triclose {

// Exact ratio of two unsigned 64-bit counts. den == 0 means "undefined"
// (empty denominator set), which is a legal state, distinct from 0/1.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den != 0) {
            std::uint64_t g = std::gcd(num, den);
            if (g > 1) { num /= g; den /= g; }
        } else {
            num = 0;
        }
    }

    bool defined() const { return den != 0; }

    double to_double() const {
        return defined() ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
    }

    std::string to_string() const {
        if (!defined()) return "undefined";
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.defined() || !b.defined()) return a.defined() == b.defined();
        return a.num == b.num && a.den == b.den;
    }
};

// Overflow-checked helpers for the integer counters. Path denominators grow
// as sum over middles of C(papers,2) * maxsize^2; 64 bits is ample for any
// realistic corpus but we fail loudly rather than wrap.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit counter overflow in path counting");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit counter overflow in path counting");
    return r;
}

inline std::uint64_t choose2(std::uint64_t n) {
    return n < 2 ? 0 : checked_mul(n, n - 1) / 2;
}

} // namespace triclose
