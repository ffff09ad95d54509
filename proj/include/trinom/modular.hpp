#pragma once

// Exact modular arithmetic on machine words.
//
// Every modulus handled here must satisfy 2 <= m < 2^63. Products are formed
// in unsigned __int128, so multiplication never overflows inside that range.
// With p <= 55108 the fourth power p^4 still fits, which covers every claim
// this library checks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinom {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = (u64{1} << 63) - 1;
inline constexpr u64 kMaxPrime = 55108;        // largest p with p^4 < 2^63
inline constexpr u64 kSieveLimit = u64{1} << 32;

class NotInvertible : public std::domain_error {
public:
    NotInvertible(i64 a, u64 m);
};

class DivisibleBase : public std::domain_error {
public:
    DivisibleBase(i64 a, u64 p);
};

class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(u64 lhs, u64 rhs);
};

// Canonical representative in [0, modulus).
class Residue {
public:
    Residue(i64 value, u64 modulus);
    static Residue from_canonical(u64 value, u64 modulus);

    u64 value() const { return value_; }
    u64 modulus() const { return modulus_; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    bool operator==(const Residue& o) const = default;

    std::string str() const { return std::to_string(value_); }

private:
    Residue(u64 value, u64 modulus, int) : value_(value), modulus_(modulus) {}
    void require_same(const Residue& o) const;

    u64 value_;
    u64 modulus_;
};

// Raw word kernels. Arguments must already be reduced below m.
inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;  // m < 2^63, no wrap
    return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}
u64 reduce(i64 a, u64 m);

void check_modulus(u64 m);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Primes in [lo, hi], ascending. Requires 2 <= lo <= hi <= kSieveLimit.
std::vector<u64> sieve_primes(u64 lo, u64 hi);

Residue pow_mod(i64 base, u64 exp, u64 m);
Residue inv_mod(i64 a, u64 m);
Residue rat_mod(i64 num, i64 den, u64 m);

// A prime p >= 5 together with the powers and residue classes the claims
// branch on. Immutable once built.
class PrimeContext {
public:
    explicit PrimeContext(u64 p);

    u64 p() const { return p_; }
    u64 p2() const { return p2_; }
    u64 p3() const { return p3_; }
    u64 p4() const { return p4_; }
    unsigned rc3() const { return rc3_; }
    unsigned rc6() const { return rc6_; }

    // Canonical constants as residues.
    Residue mod_p(i64 v) const { return Residue(v, p_); }
    Residue mod_p2(i64 v) const { return Residue(v, p2_); }

    /// p * r, lifted from a residue mod p to a residue mod p^2.
    Residue lift_times_p(const Residue& r) const;

private:
    u64 p_, p2_, p3_, p4_;
    unsigned rc3_, rc6_;
};

/// (a^(p-1) - 1) / p reduced mod p. Throws DivisibleBase when p | a.
Residue fermat_quotient(i64 a, const PrimeContext& ctx);

}  // namespace trinom
