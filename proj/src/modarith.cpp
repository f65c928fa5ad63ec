#include "ffhyper/modarith.hpp"

#include "ffhyper/error.hpp"

namespace ffhyper {

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 invmod(u64 a, u64 m) {
    i128 old_r = a % m, r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1 && m != 1) throw Error(ErrorKind::DomainError, "value not invertible modulo " + std::to_string(m));
    return reduce_signed(old_s, m);
}

int max_prime_power_exponent(u64 p) {
    int n = 0;
    u64 v = 1;
    while (v <= (kMaxModulus - 1) / p) {
        v *= p;
        ++n;
    }
    return n;
}

u64 prime_power(u64 p, int n) {
    if (n < 0) throw Error(ErrorKind::DomainError, "negative exponent");
    if (n > max_prime_power_exponent(p))
        throw Error(ErrorKind::ResourceLimit,
                    std::to_string(p) + "^" + std::to_string(n) + " exceeds the 62-bit modulus limit");
    u64 v = 1;
    for (int i = 0; i < n; ++i) v *= p;
    return v;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace ffhyper
