#pragma once

#include <cstdint>
#include <vector>

namespace ffhyper {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Moduli are kept below 2^62 so that sums of two residues never overflow.
inline constexpr u64 kMaxModulus = u64(1) << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 negmod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

// Reduce a signed integer into [0, m).
inline u64 reduce_signed(i128 x, u64 m) {
    i128 r = x % (i128)m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

// Largest N with p^N < 2^62.
int max_prime_power_exponent(u64 p);

// p^N, throws ResourceLimit if it does not fit below 2^62.
u64 prime_power(u64 p, int n);

bool is_prime(u64 n);

std::vector<u64> prime_factors(u64 n);

}  // namespace ffhyper
