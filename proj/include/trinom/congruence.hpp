#pragma once

// One checker per stated congruence. The left side always comes from a
// polynomial or summation engine and the right side from the Fermat-quotient
// closed form, so the two never share a code path.
//
// Checkers that take a ModularRow expect row_mod_prefix(n*p - 1, p^2, p);
// the overloads without one build it.

#include <vector>

#include "trinom/check.hpp"
#include "trinom/harmonic.hpp"
#include "trinom/modular.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

/// row_mod_prefix(n*p - 1, p^2, p)
ModularRow np_minus1_row(const PrimeContext& ctx, u64 n);
/// row_mod_prefix(n*p^2 - 1, p^2, p)
ModularRow np2_minus1_row(const PrimeContext& ctx, u64 n);

CheckResult check_thm1_eq2(const PrimeContext& ctx, u64 n);
CheckResult check_thm1_eq2(const PrimeContext& ctx, u64 n, const ModularRow& row);
CheckResult check_thm1_eq4(const PrimeContext& ctx, u64 n);
CheckResult check_thm1_eq4(const PrimeContext& ctx, u64 n, const ModularRow& row);

CheckResult check_thm2_eq6(const HarmonicTable& table);
CheckResult check_thm2_eq7(const HarmonicTable& table);

CheckResult check_prop3_eq9(const PrimeContext& ctx, u64 n);
CheckResult check_prop3_eq9(const PrimeContext& ctx, u64 n, const ModularRow& row);
CheckResult check_prop3_eq10(const PrimeContext& ctx, u64 n);
CheckResult check_prop3_eq10(const PrimeContext& ctx, u64 n, const ModularRow& row);

/// One record per k in 0..p-1; expects np2_minus1_row when a row is given.
std::vector<CheckResult> check_cor4_eq11(const PrimeContext& ctx, u64 n);
std::vector<CheckResult> check_cor4_eq11(const PrimeContext& ctx, u64 n, const ModularRow& row);

/// T(3k) + T(3k+1) + T(3k+2) = np / (3k+2) (mod p^2) for every 3k+2 <= p-1.
std::vector<CheckResult> check_triple_sum(const PrimeContext& ctx, u64 n, const ModularRow& row);

/// Closed forms against the polynomial row, every k in 0..p-1.
std::vector<CheckResult> check_closed_forms(const HarmonicTable& table, u64 n,
                                            const ModularRow& row);

/// binom(a, b) mod m from separately reduced numerator and denominator
/// products. Every factor of both products must be prime to p.
Residue binom_coprime_mod(u64 a, u64 b, u64 m, u64 p);

CheckResult check_babbage(const PrimeContext& ctx);
CheckResult check_wolstenholme(const PrimeContext& ctx);
CheckResult check_glaisher(const PrimeContext& ctx, u64 n);
CheckResult check_morley(const PrimeContext& ctx);
// The p^3/12 term carries B_{p-3}; without it the congruence fails for every p >= 7.
CheckResult check_carlitz(const PrimeContext& ctx);

/// B_{p-3} mod p from the power sum sum_{k<p} k^{p-3} = p B_{p-3} (mod p^2).
Residue bernoulli_p_minus_3(const PrimeContext& ctx);

/// Babbage, Wolstenholme, Glaisher at n, Morley, Carlitz.
std::vector<CheckResult> check_classical(const PrimeContext& ctx, u64 n);

}  // namespace trinom
