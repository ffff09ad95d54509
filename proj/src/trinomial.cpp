#include "trinom/trinomial.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace trinom {

namespace {

std::size_t capped_length(u64 n, std::size_t len) {
    // 2n+1 without overflow
    if (n >= (std::numeric_limits<std::size_t>::max() - 1) / 2)
        return len;
    return std::min<std::size_t>(len, 2 * n + 1);
}

// Coefficient arithmetic on words, modulus below 2^63.
struct WordRing {
    using value_type = u64;
    u64 m;

    u64 one() const { return 1 % m; }

    std::vector<u64> square(const std::vector<u64>& a, std::size_t len) const {
        const std::size_t sz = a.size();
        const std::size_t out_len = std::min(2 * sz - 1, len);
        std::vector<u64> out(out_len);
        const bool narrow = m <= (u64{1} << 32);
        for (std::size_t i = 0; i < out_len; ++i) {
            std::size_t lo = i >= sz ? i - sz + 1 : 0;
            std::size_t hi = (i - 1) / 2;  // j < i - j
            u128 acc = 0;
            if (i > 0) {
                if (narrow) {
                    for (std::size_t j = lo; j <= hi; ++j)
                        acc += static_cast<u128>(a[j] * a[i - j]);
                } else {
                    for (std::size_t j = lo; j <= hi; ++j)
                        acc += static_cast<u128>(a[j]) * a[i - j] % m;
                }
            }
            acc *= 2;
            if (i % 2 == 0 && i / 2 < sz)
                acc += static_cast<u128>(a[i / 2]) * a[i / 2] % m;
            out[i] = static_cast<u64>(acc % m);
        }
        return out;
    }

    std::vector<u64> times_trinomial(const std::vector<u64>& a, std::size_t len) const {
        const std::size_t sz = a.size();
        const std::size_t out_len = std::min(sz + 2, len);
        std::vector<u64> out(out_len);
        for (std::size_t i = 0; i < out_len; ++i) {
            u64 s = i < sz ? a[i] : 0;
            if (i >= 1 && i - 1 < sz)
                s = add_mod(s, a[i - 1], m);
            if (i >= 2 && i - 2 < sz)
                s = add_mod(s, a[i - 2], m);
            out[i] = s;
        }
        return out;
    }
};

struct BigRing {
    using value_type = BigInt;
    BigInt m;

    BigInt one() const { return BigInt(1) % m; }

    std::vector<BigInt> square(const std::vector<BigInt>& a, std::size_t len) const {
        const std::size_t sz = a.size();
        const std::size_t out_len = std::min(2 * sz - 1, len);
        std::vector<BigInt> out(out_len);
        for (std::size_t i = 0; i < out_len; ++i) {
            BigInt acc = 0;
            std::size_t lo = i >= sz ? i - sz + 1 : 0;
            std::size_t hi = std::min(i, sz - 1);
            for (std::size_t j = lo; j <= hi; ++j)
                acc += a[j] * a[i - j];
            out[i] = acc % m;
        }
        return out;
    }

    std::vector<BigInt> times_trinomial(const std::vector<BigInt>& a, std::size_t len) const {
        const std::size_t sz = a.size();
        const std::size_t out_len = std::min(sz + 2, len);
        std::vector<BigInt> out(out_len);
        for (std::size_t i = 0; i < out_len; ++i) {
            BigInt s = i < sz ? a[i] : BigInt(0);
            if (i >= 1 && i - 1 < sz)
                s += a[i - 1];
            if (i >= 2 && i - 2 < sz)
                s += a[i - 2];
            out[i] = s % m;
        }
        return out;
    }
};

// Left-to-right binary powering of 1 + x + x^2, every product truncated to len terms.
template <class Ring>
std::vector<typename Ring::value_type> trinomial_power_prefix(const Ring& ring, u64 n,
                                                              std::size_t len) {
    std::vector<typename Ring::value_type> acc{ring.one()};
    if (n == 0)
        return acc;
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        acc = ring.square(acc, len);
        if ((n >> bit) & 1)
            acc = ring.times_trinomial(acc, len);
    }
    return acc;
}

// 2 cos(r pi / 3) for r = 0..5
constexpr std::array<int, 6> kDoubledCosine{2, 1, -1, -2, -1, 1};

std::vector<BigInt> binomial_row(u64 n) {
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (u64 j = 0; j < n; ++j)
        row[j + 1] = row[j] * (n - j) / (j + 1);
    return row;
}

Residue sign_mod(u64 exponent, u64 m) { return Residue(exponent % 2 ? -1 : 1, m); }

}  // namespace

TrinomialRow row_exact(u64 n) {
    if (n > kMaxExactRow)
        throw std::invalid_argument("row_exact supports n <= " + std::to_string(kMaxExactRow));
    std::vector<BigInt> row{1};
    for (u64 i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 2);
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < row.size())
                next[k] += row[k];
            if (k >= 1 && k - 1 < row.size())
                next[k] += row[k - 1];
            if (k >= 2)
                next[k] += row[k - 2];
        }
        row = std::move(next);
    }
    return TrinomialRow{n, std::move(row)};
}

ModularRow row_mod_prefix(u64 n, u64 m, std::size_t len) {
    check_modulus(m);
    if (len == 0)
        throw std::invalid_argument("row_mod_prefix needs len >= 1");
    len = capped_length(n, len);
    return ModularRow{n, m, trinomial_power_prefix(WordRing{m}, n, len)};
}

std::vector<BigInt> row_mod_prefix(u64 n, const BigInt& m, std::size_t len) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (len == 0)
        throw std::invalid_argument("row_mod_prefix needs len >= 1");
    return trinomial_power_prefix(BigRing{m}, n, capped_length(n, len));
}

BigInt binom_exact(u64 a, u64 b) {
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (u64 i = 0; i < b; ++i)
        r = r * (a - i) / (i + 1);
    return r;
}

BigInt coeff_via_cosine(u64 n, u64 k) {
    if (k > 2 * n)
        throw std::invalid_argument("coefficient index exceeds 2n");
    const auto row = binomial_row(n);
    BigInt doubled = 0;
    const u64 j_lo = k > n ? k - n : 0;
    const u64 j_hi = std::min(k, n);
    for (u64 j = j_lo; j <= j_hi; ++j) {
        i64 r = (static_cast<i64>(k) - 2 * static_cast<i64>(j)) % 6;
        if (r < 0)
            r += 6;
        doubled += row[j] * row[k - j] * kDoubledCosine[static_cast<std::size_t>(r)];
    }
    if (boost::multiprecision::bit_test(doubled, 0))
        throw OddDoubledSum("cosine-weighted sum is odd for n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
    return doubled / 2;
}

BigInt coeff_via_convolution(u64 n, u64 k) {
    if (k > 2 * n)
        throw std::invalid_argument("coefficient index exceeds 2n");
    const auto row = binomial_row(n);
    BigInt sum = 0;
    for (u64 j = (k + 1) / 2; j <= std::min(k, n); ++j)
        sum += row[j] * binom_exact(j, k - j);
    return sum;
}

Residue binom_np_minus1_mod_p2(u64 n, const HarmonicTable& table, u64 k) {
    const auto& ctx = table.context();
    if (k >= ctx.p())
        throw std::out_of_range("binom_np_minus1_mod_p2 needs k <= p-1");
    const Residue n_mod_p = ctx.mod_p(static_cast<i64>(n % ctx.p()));
    const Residue inner = ctx.mod_p2(1) - ctx.lift_times_p(n_mod_p * table.at(k));
    return sign_mod(k, ctx.p2()) * inner;
}

Residue coeff_closed_mod_p2(u64 n, const HarmonicTable& table, u64 k) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    if (k >= p)
        throw std::out_of_range("closed forms hold for k <= p-1");
    const i64 q = static_cast<i64>(k / 3);
    const Residue n_mod_p = ctx.mod_p(static_cast<i64>(n % p));
    const Residue two_thirds_h = rat_mod(2, 3, p) * table.at(static_cast<u64>(q));
    auto np_times = [&](const Residue& x) { return ctx.lift_times_p(n_mod_p * x); };

    switch (k % 3) {
    case 0:
        return ctx.mod_p2(1) - np_times(two_thirds_h + ap_harmonic(q - 1, 3, 2, ctx));
    case 1:
        return ctx.mod_p2(-1) + np_times(two_thirds_h + ap_harmonic(q, 3, 1, ctx));
    default:
        return np_times(ap_harmonic(q, 3, 2, ctx) - ap_harmonic(q, 3, 1, ctx));
    }
}

std::vector<Residue> closed_forms_mod_p2(u64 n, const HarmonicTable& table) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    const auto inv = inverse_table(p);
    const u64 two_thirds = rat_mod(2, 3, p).value();
    const u64 n_mod_p = n % p;
    auto np_times = [&](u64 x) {
        return Residue::from_canonical(mul_mod(n_mod_p, x, p) * p, ctx.p2());
    };

    std::vector<Residue> out;
    out.reserve(p);
    u64 s1 = 0;  // sum of 1/(3j+1) over 3j+1 <= k
    u64 s2 = 0;  // sum of 1/(3j+2) over 3j+2 <= k
    for (u64 k = 0; k < p; ++k) {
        if (k % 3 == 1)
            s1 = add_mod(s1, inv[k], p);
        else if (k % 3 == 2)
            s2 = add_mod(s2, inv[k], p);
        const u64 th = mul_mod(two_thirds, table.values()[k / 3], p);
        switch (k % 3) {
        case 0:
            out.push_back(ctx.mod_p2(1) - np_times(add_mod(th, s2, p)));
            break;
        case 1:
            out.push_back(ctx.mod_p2(-1) + np_times(add_mod(th, s1, p)));
            break;
        default:
            out.push_back(np_times(sub_mod(s2, s1, p)));
            break;
        }
    }
    return out;
}

int alt_fib_sum(u64 n) {
    BigInt sum = 0;
    for (u64 k = 0; k <= n / 2; ++k) {
        BigInt term = binom_exact(n - k, k);
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum.convert_to<int>();
}

std::vector<CheckResult> halfrow_binomial_check(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    const u64 h = (p - 1) / 2;
    std::vector<CheckResult> out;
    for (u64 k = 1; k <= (p - 1) / 4; ++k) {
        // binom(h - k, k) as a falling product over k!
        u64 num = 1, den = 1;
        for (u64 i = 0; i < k; ++i) {
            num = mul_mod(num, h - k - i, p);
            den = mul_mod(den, i + 1, p);
        }
        Residue lhs = sign_mod(k, p) * Residue::from_canonical(num, p) *
                      inv_mod(static_cast<i64>(den), p);

        // binom(4k, 2k) = prod_{i=1}^{2k} (2k + i) / i
        u64 cnum = 1, cden = 1;
        for (u64 i = 1; i <= 2 * k; ++i) {
            cnum = mul_mod(cnum, 2 * k + i, p);
            cden = mul_mod(cden, i, p);
        }
        Residue rhs = Residue::from_canonical(cnum, p) * inv_mod(static_cast<i64>(cden), p) *
                      inv_mod(static_cast<i64>(pow_mod(4, k, p).value()), p);
        out.push_back(make_check(ClaimId::HalfRow_Binomial, p, {}, k, lhs, rhs));
    }
    return out;
}

}  // namespace trinom
