#pragma once

#include <vector>

#include "trinom/check.hpp"
#include "trinom/modular.hpp"

namespace trinom {

/// Inverses of 1..p-1 modulo p via inv(i) = -(p / i) * inv(p mod i).
/// Entry 0 is unused and holds 0.
std::vector<u64> inverse_table(u64 p);

// H_n mod p for 0 <= n <= p-1.
class HarmonicTable {
public:
    explicit HarmonicTable(const PrimeContext& ctx);

    const PrimeContext& context() const { return ctx_; }
    Residue at(u64 n) const;
    const std::vector<u64>& values() const { return values_; }

private:
    PrimeContext ctx_;
    std::vector<u64> values_;
};

inline HarmonicTable harmonic_table(const PrimeContext& ctx) { return HarmonicTable(ctx); }

/// H_0..H_upto mod p summed term by term from extended-Euclid inverses.
/// Shares no code with HarmonicTable; used as the independent side of
/// harmonic identities.
std::vector<Residue> harmonic_direct(const PrimeContext& ctx, u64 upto);

/// Sum over k = 0..m of 1/(d*k + r) mod p; zero when m < 0.
/// Throws NotInvertible if a term is divisible by p.
Residue ap_harmonic(i64 m, i64 d, i64 r, const PrimeContext& ctx);

/// H at floor(p/2), floor(p/3), floor(p/6) against Fermat-quotient forms.
std::vector<CheckResult> check_half_third_sixth(const HarmonicTable& table);

/// H_{p-k} = H_{k-1} for 1 <= k <= p-1, and
/// H_{(p-1)/2-k} = -2q_2 + 2H_{2k} - H_k for 1 <= k <= (p-1)/2.
std::vector<CheckResult> check_reflections(const HarmonicTable& table);

/// Progression sums over 3k+1, 3k+2 and 2k+1. Only the claims stated for
/// the prime's residue class mod 3 and mod 6 are emitted.
std::vector<CheckResult> check_progression_lemmas(const PrimeContext& ctx);

}  // namespace trinom
