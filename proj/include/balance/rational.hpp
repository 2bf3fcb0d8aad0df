#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace balance {

// Small exact rational on int64. Cheeger-time suprema are compared in exact
// arithmetic so ties between cuts are resolved deterministically; conversion
// to double happens only at the reporting boundary.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
};

}  // namespace balance
