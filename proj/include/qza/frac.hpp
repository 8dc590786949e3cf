#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qza {

/// Exact rational with small (64-bit) components.  Used for exponents of
/// formal variables, grading values, mode indices and lattice coordinates,
/// all of which stay tiny.  Field coefficients use QRat instead.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    /// Integer value; throws when the value is not integral.
    long long to_int() const {
        if (den != 1) throw std::domain_error("Frac: not an integer: " + to_string());
        return num;
    }

    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num == 0) throw std::domain_error("Frac: division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
    Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
    Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }
    Frac& operator/=(const Frac& o) { *this = *this / o; return *this; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Largest integer <= value.
    long long floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }
    /// Smallest integer >= value.
    long long ceil() const { return -(-*this).floor(); }

    Frac abs() const { return num < 0 ? -*this : *this; }
};

inline Frac frac_lcm_den(const Frac& a, const Frac& b) {
    return Frac(std::lcm(a.den, b.den));
}

} // namespace qza
