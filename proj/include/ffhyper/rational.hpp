#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "ffhyper/modarith.hpp"

namespace ffhyper {

// Exact rational with 64-bit numerator and positive denominator in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i64 n, i64 d);

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    i64 floor() const;
    Rational frac() const;  // x - floor(x), in [0, 1)
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

    // Parses "n", "n/d", with optional sign.
    static Rational parse(const std::string& text);

private:
    static Rational from_wide(i128 n, i128 d);

    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace ffhyper
