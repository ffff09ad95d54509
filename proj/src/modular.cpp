#include "trinom/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace trinom {

NotInvertible::NotInvertible(i64 a, u64 m)
    : std::domain_error(std::to_string(a) + " is not invertible modulo " + std::to_string(m)) {}

DivisibleBase::DivisibleBase(i64 a, u64 p)
    : std::domain_error("Fermat quotient base " + std::to_string(a) + " is divisible by " +
                        std::to_string(p)) {}

ModulusMismatch::ModulusMismatch(u64 lhs, u64 rhs)
    : std::invalid_argument("residue moduli differ: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

void check_modulus(u64 m) {
    if (m < 2 || m > kMaxModulus)
        throw std::invalid_argument("modulus " + std::to_string(m) + " outside [2, 2^63)");
}

u64 reduce(i64 a, u64 m) {
    if (a >= 0)
        return static_cast<u64>(a) % m;
    // -(a+1) avoids overflow at INT64_MIN
    u64 r = static_cast<u64>(-(a + 1)) % m;
    return m - 1 - r;
}

Residue::Residue(i64 value, u64 modulus) : modulus_(modulus) {
    check_modulus(modulus);
    value_ = reduce(value, modulus);
}

Residue Residue::from_canonical(u64 value, u64 modulus) {
    check_modulus(modulus);
    if (value >= modulus)
        throw std::invalid_argument("non-canonical residue " + std::to_string(value));
    return Residue(value, modulus, 0);
}

void Residue::require_same(const Residue& o) const {
    if (modulus_ != o.modulus_)
        throw ModulusMismatch(modulus_, o.modulus_);
}

Residue Residue::operator+(const Residue& o) const {
    require_same(o);
    return Residue(add_mod(value_, o.value_, modulus_), modulus_, 0);
}

Residue Residue::operator-(const Residue& o) const {
    require_same(o);
    return Residue(sub_mod(value_, o.value_, modulus_), modulus_, 0);
}

Residue Residue::operator*(const Residue& o) const {
    require_same(o);
    return Residue(mul_mod(value_, o.value_, modulus_), modulus_, 0);
}

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_, 0);
}

namespace {

u64 pow_word(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool strong_probable_prime(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_word(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    // The first twelve primes form a witness set for all n < 3.3e24.
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    return std::all_of(bases.begin(), bases.end(),
                       [n](u64 a) { return strong_probable_prime(n, a); });
}

std::vector<u64> sieve_primes(u64 lo, u64 hi) {
    if (lo < 2 || lo > hi)
        throw std::invalid_argument("sieve range requires 2 <= lo <= hi");
    if (hi > kSieveLimit)
        throw std::invalid_argument("sieve upper bound exceeds 2^32");

    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi)
        --root;
    while ((root + 1) * (root + 1) <= hi)
        ++root;

    std::vector<bool> small(root + 1, true);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i])
            continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i)
            small[j] = false;
    }

    constexpr u64 kSegment = u64{1} << 20;
    std::vector<u64> out;
    std::vector<bool> seg;
    for (u64 start = lo; start <= hi; start += kSegment) {
        u64 stop = std::min(hi, start + kSegment - 1);
        seg.assign(stop - start + 1, true);
        for (u64 q : base) {
            if (q * q > stop)
                break;
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j <= stop; j += q)
                seg[j - start] = false;
        }
        for (u64 i = start; i <= stop; ++i)
            if (seg[i - start])
                out.push_back(i);
        if (stop == hi)
            break;
    }
    return out;
}

Residue pow_mod(i64 base, u64 exp, u64 m) {
    check_modulus(m);
    return Residue::from_canonical(pow_word(reduce(base, m), exp, m), m);
}

Residue inv_mod(i64 a, u64 m) {
    check_modulus(m);
    // Extended Euclid on signed 128-bit values.
    using i128 = __int128;
    i128 old_r = reduce(a, m), r = m;
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
    if (old_r != 1)
        throw NotInvertible(a, m);
    i128 x = old_s % static_cast<i128>(m);
    if (x < 0)
        x += m;
    return Residue::from_canonical(static_cast<u64>(x), m);
}

Residue rat_mod(i64 num, i64 den, u64 m) {
    return Residue(num, m) * inv_mod(den, m);
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
    if (p < 5)
        throw std::invalid_argument("prime context requires p >= 5, got " + std::to_string(p));
    if (p > kMaxPrime)
        throw std::invalid_argument("prime " + std::to_string(p) + " exceeds capacity " +
                                    std::to_string(kMaxPrime));
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    p2_ = p * p;
    p3_ = p2_ * p;
    p4_ = p3_ * p;
    rc3_ = static_cast<unsigned>(p % 3);
    rc6_ = static_cast<unsigned>(p % 6);
}

Residue PrimeContext::lift_times_p(const Residue& r) const {
    if (r.modulus() != p_)
        throw ModulusMismatch(r.modulus(), p_);
    return Residue::from_canonical(r.value() * p_, p2_);
}

Residue fermat_quotient(i64 a, const PrimeContext& ctx) {
    if (reduce(a, ctx.p()) == 0)
        throw DivisibleBase(a, ctx.p());
    u64 t = pow_mod(a, ctx.p() - 1, ctx.p2()).value();
    // t = 1 + p*q (mod p^2), so t - 1 is an exact multiple of p.
    return Residue::from_canonical((t + ctx.p2() - 1) % ctx.p2() / ctx.p(), ctx.p());
}

}  // namespace trinom
