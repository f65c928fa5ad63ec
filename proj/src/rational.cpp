#include "ffhyper/rational.hpp"

#include <limits>
#include <numeric>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Rational::Rational(i64 n, i64 d) {
    *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
    if (d == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr i128 lo = std::numeric_limits<i64>::min() + 1;
    constexpr i128 hi = std::numeric_limits<i64>::max();
    if (n < lo || n > hi || d > hi) throw Error(ErrorKind::ResourceLimit, "rational overflow");
    Rational r;
    r.num_ = static_cast<i64>(n);
    r.den_ = static_cast<i64>(d);
    return r;
}

i64 Rational::floor() const { return static_cast<i64>(floor_div(num_, den_)); }

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return from_wide(-(i128)num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide((i128)a.num_ * b.den_ + (i128)b.num_ * a.den_, (i128)a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from_wide((i128)a.num_ * b.den_ - (i128)b.num_ * a.den_, (i128)a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide((i128)a.num_ * b.num_, (i128)a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational::from_wide((i128)a.num_ * b.den_, (i128)a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = (i128)a.num_ * b.den_;
    i128 r = (i128)b.num_ * a.den_;
    return l <=> r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> i64 {
        if (s.empty()) throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
        size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
        }
        if (pos != s.size()) throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace ffhyper
