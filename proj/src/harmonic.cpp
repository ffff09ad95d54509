#include "trinom/harmonic.hpp"

namespace trinom {

std::vector<u64> inverse_table(u64 p) {
    std::vector<u64> inv(p, 0);
    if (p > 1)
        inv[1] = 1;
    for (u64 i = 2; i < p; ++i)
        inv[i] = mul_mod(p - p / i, inv[p % i], p);
    return inv;
}

HarmonicTable::HarmonicTable(const PrimeContext& ctx) : ctx_(ctx) {
    const u64 p = ctx.p();
    auto inv = inverse_table(p);
    values_.assign(p, 0);
    for (u64 n = 1; n < p; ++n)
        values_[n] = add_mod(values_[n - 1], inv[n], p);
}

Residue HarmonicTable::at(u64 n) const {
    if (n >= values_.size())
        throw std::out_of_range("harmonic index " + std::to_string(n) + " outside [0, p-1]");
    return Residue::from_canonical(values_[n], ctx_.p());
}

std::vector<Residue> harmonic_direct(const PrimeContext& ctx, u64 upto) {
    if (upto >= ctx.p())
        throw std::out_of_range("harmonic_direct needs upto < p");
    std::vector<Residue> out;
    out.reserve(upto + 1);
    Residue acc = ctx.mod_p(0);
    out.push_back(acc);
    for (u64 i = 1; i <= upto; ++i) {
        acc += inv_mod(static_cast<i64>(i), ctx.p());
        out.push_back(acc);
    }
    return out;
}

Residue ap_harmonic(i64 m, i64 d, i64 r, const PrimeContext& ctx) {
    Residue acc = ctx.mod_p(0);
    for (i64 k = 0; k <= m; ++k)
        acc += inv_mod(d * k + r, ctx.p());
    return acc;
}

namespace {

struct Quotients {
    Residue q2, q3;
    explicit Quotients(const PrimeContext& ctx)
        : q2(fermat_quotient(2, ctx)), q3(fermat_quotient(3, ctx)) {}
};

}  // namespace

std::vector<CheckResult> check_half_third_sixth(const HarmonicTable& table) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    const Quotients q(ctx);
    auto frac = [p](i64 a, i64 b) { return rat_mod(a, b, p); };

    std::vector<CheckResult> out;
    out.push_back(make_check(ClaimId::Lemma_GL0, p, {}, {}, table.at(p / 2), frac(-2, 1) * q.q2));
    out.push_back(make_check(ClaimId::Lemma_GL, p, {}, {}, table.at(p / 3), frac(-3, 2) * q.q3));
    out.push_back(make_check(ClaimId::Lemma_GL2, p, {}, {}, table.at(p / 6),
                             frac(-2, 1) * q.q2 + frac(-3, 2) * q.q3));
    return out;
}

std::vector<CheckResult> check_reflections(const HarmonicTable& table) {
    const auto& ctx = table.context();
    const u64 p = ctx.p();
    const auto direct = harmonic_direct(ctx, p - 1);
    const Residue minus_two_q2 = ctx.mod_p(-2) * fermat_quotient(2, ctx);
    const Residue two = ctx.mod_p(2);

    std::vector<CheckResult> out;
    out.reserve(p - 1 + (p - 1) / 2);
    for (u64 k = 1; k <= p - 1; ++k)
        out.push_back(make_check(ClaimId::Lemma_CONG0, p, {}, k, table.at(p - k), direct[k - 1]));
    const u64 half = (p - 1) / 2;
    for (u64 k = 1; k <= half; ++k)
        out.push_back(make_check(ClaimId::Lemma_CONG1, p, {}, k, table.at(half - k),
                                 minus_two_q2 + two * direct[2 * k] - direct[k]));
    return out;
}

std::vector<CheckResult> check_progression_lemmas(const PrimeContext& ctx) {
    const u64 p = ctx.p();
    const i64 ip = static_cast<i64>(p);
    const Quotients q(ctx);
    auto frac = [p](i64 a, i64 b) { return rat_mod(a, b, p); };
    auto emit = [&](std::vector<CheckResult>& out, ClaimId id, const Residue& lhs,
                    const Residue& rhs) { out.push_back(make_check(id, p, {}, {}, lhs, rhs)); };

    std::vector<CheckResult> out;
    if (ctx.rc3() == 1) {
        const i64 m = (ip - 4) / 3;
        emit(out, ClaimId::Lemma_C1b, ap_harmonic(m, 3, 2, ctx), frac(0, 1));
        emit(out, ClaimId::Lemma_C1c, ap_harmonic(m, 3, 1, ctx), frac(1, 2) * q.q3);
    } else {
        const i64 m = (ip - 5) / 3;
        emit(out, ClaimId::Lemma_C2b, ap_harmonic(m, 3, 1, ctx), frac(1, 1));
        emit(out, ClaimId::Lemma_C2c, ap_harmonic(m, 3, 2, ctx), frac(1, 2) * q.q3);
    }

    if (ctx.rc6() == 1) {
        const i64 m = (ip - 1) / 6;
        emit(out, ClaimId::Lemma_C3, ap_harmonic(m, 2, 1, ctx),
             q.q2 + frac(-3, 4) * q.q3 + frac(3, 2));
        emit(out, ClaimId::Lemma_H0, ap_harmonic(m, 3, 1, ctx), frac(-2, 3) * q.q2 + frac(2, 1));
        emit(out, ClaimId::Lemma_H1, ap_harmonic(m, 3, 2, ctx),
             frac(-2, 3) * q.q2 + frac(1, 2) * q.q3 + frac(2, 3));
    } else {
        const i64 m = (ip - 5) / 6;
        emit(out, ClaimId::Lemma_C3b, ap_harmonic(m, 2, 1, ctx), q.q2 + frac(-3, 4) * q.q3);
        emit(out, ClaimId::Lemma_H3, ap_harmonic(m, 3, 1, ctx),
             frac(1, 2) * q.q3 + frac(-2, 3) * q.q2);
        emit(out, ClaimId::Lemma_H2, ap_harmonic(m, 3, 2, ctx), frac(-2, 3) * q.q2);
    }
    return out;
}

}  // namespace trinom
