#include "trinom/congruence.hpp"

#include <stdexcept>

namespace trinom {

namespace {

// n * p * x mod p^2 for a quotient-like factor x known mod p.
Residue np_times(const PrimeContext& ctx, u64 n, const Residue& x) {
    return ctx.lift_times_p(ctx.mod_p(static_cast<i64>(n % ctx.p())) * x);
}

Residue parity_sign(u64 exponent, u64 m) { return Residue(exponent % 2 ? -1 : 1, m); }

void require_row(const PrimeContext& ctx, u64 exponent, const ModularRow& row) {
    if (row.n != exponent || row.modulus != ctx.p2() || row.coeffs.size() < ctx.p())
        throw std::invalid_argument("row does not match (1+x+x^2)^" + std::to_string(exponent) +
                                    " mod p^2 with p terms");
}

Residue prefix_sum(const ModularRow& row, u64 last) {
    u64 acc = 0;
    for (u64 k = 0; k <= last; ++k)
        acc = add_mod(acc, row.coeffs[k], row.modulus);
    return Residue::from_canonical(acc, row.modulus);
}

}  // namespace

ModularRow np_minus1_row(const PrimeContext& ctx, u64 n) {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    return row_mod_prefix(n * ctx.p() - 1, ctx.p2(), ctx.p());
}

ModularRow np2_minus1_row(const PrimeContext& ctx, u64 n) {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    return row_mod_prefix(n * ctx.p2() - 1, ctx.p2(), ctx.p());
}

CheckResult check_thm1_eq2(const PrimeContext& ctx, u64 n) {
    return check_thm1_eq2(ctx, n, np_minus1_row(ctx, n));
}

CheckResult check_thm1_eq2(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p() - 1, row);
    const Residue lhs = row.at(ctx.p() - 1);
    const Residue t = ctx.mod_p2(1) + np_times(ctx, n, fermat_quotient(3, ctx));
    const Residue rhs = ctx.rc3() == 1 ? t : -t;
    return make_check(ClaimId::Thm1_Eq2, ctx.p(), n, {}, lhs, rhs);
}

CheckResult check_thm1_eq4(const PrimeContext& ctx, u64 n) {
    return check_thm1_eq4(ctx, n, np_minus1_row(ctx, n));
}

CheckResult check_thm1_eq4(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p() - 1, row);
    const u64 p = ctx.p();
    const Residue lhs = row.at((p - 1) / 2);
    const Residue q2 = fermat_quotient(2, ctx);
    const Residue q3 = fermat_quotient(3, ctx);
    const Residue rhs =
        ctx.rc6() == 1
            ? ctx.mod_p2(1) + np_times(ctx, n, ctx.mod_p(2) * q2 + rat_mod(1, 2, p) * q3)
            : np_times(ctx, n, rat_mod(-1, 2, p) * q3);
    return make_check(ClaimId::Thm1_Eq4, p, n, {}, lhs, rhs);
}

CheckResult check_thm2_eq6(const HarmonicTable& table) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    // binom(2k, k) = binom(2k-2, k-1) * 2(2k-1) / k
    Residue central = ctx.mod_p(1);
    Residue lhs = ctx.mod_p(0);
    for (u64 k = 1; k <= (p - 1) / 2; ++k) {
        central *= ctx.mod_p(static_cast<i64>(2 * (2 * k - 1))) * inv_mod(static_cast<i64>(k), p);
        lhs += central * table.at(k);
    }
    const Residue q3 = fermat_quotient(3, ctx);
    return make_check(ClaimId::Thm2_Eq6, p, {}, {}, lhs, ctx.rc3() == 1 ? -q3 : q3);
}

CheckResult check_thm2_eq7(const HarmonicTable& table) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    const Residue inv4 = inv_mod(4, p);
    Residue central = ctx.mod_p(1);  // binom(4k, 2k)
    Residue inv4k = ctx.mod_p(1);
    Residue lhs = ctx.mod_p(0);
    for (u64 k = 1; k <= (p - 1) / 4; ++k) {
        for (u64 i = 4 * k - 3; i <= 4 * k; ++i)
            central *= ctx.mod_p(static_cast<i64>(i));
        const Residue d = ctx.mod_p(static_cast<i64>((2 * k) * (2 * k - 1) % p));
        central *= inv_mod(static_cast<i64>((d * d).value()), p);
        inv4k *= inv4;
        lhs += inv4k * central * (ctx.mod_p(2) * table.at(2 * k) - table.at(k));
    }
    const Residue half_q3 = rat_mod(1, 2, p) * fermat_quotient(3, ctx);
    const Residue signed_half = parity_sign((p - 1) / 2, p) * half_q3;
    const Residue rhs = ctx.rc6() == 1 ? -signed_half : signed_half;
    return make_check(ClaimId::Thm2_Eq7, p, {}, {}, lhs, rhs);
}

CheckResult check_prop3_eq9(const PrimeContext& ctx, u64 n) {
    return check_prop3_eq9(ctx, n, np_minus1_row(ctx, n));
}

CheckResult check_prop3_eq9(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p() - 1, row);
    const Residue lhs = prefix_sum(row, ctx.p() - 1);
    const Residue rhs = ctx.rc3() == 1
                            ? ctx.mod_p2(1) + np_times(ctx, n, fermat_quotient(3, ctx))
                            : ctx.mod_p2(0);
    return make_check(ClaimId::Prop3_Eq9, ctx.p(), n, {}, lhs, rhs);
}

CheckResult check_prop3_eq10(const PrimeContext& ctx, u64 n) {
    return check_prop3_eq10(ctx, n, np_minus1_row(ctx, n));
}

CheckResult check_prop3_eq10(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p() - 1, row);
    const u64 p = ctx.p();
    const Residue lhs = prefix_sum(row, (p - 1) / 2);
    const Residue q2 = fermat_quotient(2, ctx);
    const Residue rhs =
        ctx.rc6() == 1
            ? ctx.mod_p2(1) + np_times(ctx, n, rat_mod(4, 3, p) * q2 + fermat_quotient(3, ctx))
            : np_times(ctx, n, rat_mod(-2, 3, p) * q2);
    return make_check(ClaimId::Prop3_Eq10, p, n, {}, lhs, rhs);
}

std::vector<CheckResult> check_cor4_eq11(const PrimeContext& ctx, u64 n) {
    return check_cor4_eq11(ctx, n, np2_minus1_row(ctx, n));
}

std::vector<CheckResult> check_cor4_eq11(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p2() - 1, row);
    static constexpr i64 kPattern[3] = {1, -1, 0};
    std::vector<CheckResult> out;
    out.reserve(ctx.p());
    for (u64 k = 0; k < ctx.p(); ++k)
        out.push_back(
            make_check(ClaimId::Cor4_Eq11, ctx.p(), n, k, row.at(k), ctx.mod_p2(kPattern[k % 3])));
    return out;
}

std::vector<CheckResult> check_triple_sum(const PrimeContext& ctx, u64 n, const ModularRow& row) {
    require_row(ctx, n * ctx.p() - 1, row);
    const u64 p = ctx.p();
    std::vector<CheckResult> out;
    for (u64 k = 0; 3 * k + 2 <= p - 1; ++k) {
        const Residue lhs = row.at(3 * k) + row.at(3 * k + 1) + row.at(3 * k + 2);
        const Residue rhs = np_times(ctx, n, inv_mod(static_cast<i64>(3 * k + 2), p));
        out.push_back(make_check(ClaimId::TripleSum_a, p, n, k, lhs, rhs));
    }
    return out;
}

std::vector<CheckResult> check_closed_forms(const HarmonicTable& table, u64 n,
                                            const ModularRow& row) {
    const auto& ctx = table.context();
    require_row(ctx, n * ctx.p() - 1, row);
    const auto closed = closed_forms_mod_p2(n, table);
    std::vector<CheckResult> out;
    out.reserve(ctx.p());
    for (u64 k = 0; k < ctx.p(); ++k)
        out.push_back(make_check(ClaimId::PropP_CC, ctx.p(), n, k, row.at(k), closed[k]));
    return out;
}

Residue binom_coprime_mod(u64 a, u64 b, u64 m, u64 p) {
    if (b > a)
        return Residue(0, m);
    u64 num = 1 % m, den = 1 % m;
    for (u64 i = 0; i < b; ++i) {
        const u64 top = a - i;
        const u64 bottom = i + 1;
        if (top % p == 0 || bottom % p == 0)
            throw NotInvertible(static_cast<i64>(top % p == 0 ? top : bottom), p);
        num = mul_mod(num, top % m, m);
        den = mul_mod(den, bottom % m, m);
    }
    return Residue::from_canonical(num, m) * inv_mod(static_cast<i64>(den), m);
}

CheckResult check_babbage(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    return make_check(ClaimId::Babbage, p, {}, {}, binom_coprime_mod(2 * p - 1, p - 1, ctx.p2(), p),
                      ctx.mod_p2(1));
}

CheckResult check_wolstenholme(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    return make_check(ClaimId::Wolstenholme, p, {}, {},
                      binom_coprime_mod(2 * p - 1, p - 1, ctx.p3(), p), Residue(1, ctx.p3()));
}

CheckResult check_glaisher(const PrimeContext& ctx, u64 n) {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    const u64 p = ctx.p();
    return make_check(ClaimId::Glaisher, p, n, {},
                      binom_coprime_mod(n * p - 1, p - 1, ctx.p3(), p), Residue(1, ctx.p3()));
}

CheckResult check_morley(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    const u64 h = (p - 1) / 2;
    const Residue lhs = binom_coprime_mod(p - 1, h, ctx.p3(), p);
    const Residue rhs = parity_sign(h, ctx.p3()) * pow_mod(4, p - 1, ctx.p3());
    return make_check(ClaimId::Morley, p, {}, {}, lhs, rhs);
}

Residue bernoulli_p_minus_3(const PrimeContext& ctx) {
    const u64 p = ctx.p(), p2 = ctx.p2();
    u64 s = 0;
    for (u64 k = 1; k < p; ++k)
        s = add_mod(s, pow_mod(static_cast<i64>(k), p - 3, p2).value(), p2);
    if (s % p != 0)
        throw std::logic_error("power sum not divisible by p");
    return ctx.mod_p(static_cast<i64>(s / p));
}

CheckResult check_carlitz(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    const u64 h = (p - 1) / 2;
    const u64 m = ctx.p4();
    const Residue lhs = parity_sign(h, m) * binom_coprime_mod(p - 1, h, m, p);
    const Residue b = Residue(static_cast<i64>(bernoulli_p_minus_3(ctx).value()), m);
    const Residue rhs = pow_mod(4, p - 1, m) + Residue(static_cast<i64>(ctx.p3()), m) * inv_mod(12, m) * b;
    return make_check(ClaimId::Carlitz, p, {}, {}, lhs, rhs);
}

std::vector<CheckResult> check_classical(const PrimeContext& ctx, u64 n) {
    return {check_babbage(ctx), check_wolstenholme(ctx), check_glaisher(ctx, n), check_morley(ctx),
            check_carlitz(ctx)};
}

}  // namespace trinom
