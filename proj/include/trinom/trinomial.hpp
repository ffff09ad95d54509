#pragma once

// Trinomial coefficients T(n, k): the coefficient of x^k in (1 + x + x^2)^n.
//
// Four independent routes are provided and cross-checked by the tests:
//   row_exact              Pascal-style recurrence on exact integers
//   row_mod_prefix         truncated binary powering of 1 + x + x^2 mod m
//   coeff_via_cosine       sum of binom(n,j) binom(n,k-j) weighted by cos((k-2j)pi/3)
//   coeff_via_convolution  sum of binom(n,j) binom(j,k-j)
// plus the mod p^2 closed forms for T(np-1, k), 0 <= k <= p-1.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/check.hpp"
#include "trinom/harmonic.hpp"
#include "trinom/modular.hpp"

namespace trinom {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr u64 kMaxExactRow = 4096;

class OddDoubledSum : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct TrinomialRow {
    u64 n = 0;
    std::vector<BigInt> coeffs;
};

struct ModularRow {
    u64 n = 0;
    u64 modulus = 2;
    std::vector<u64> coeffs;  // canonical, length min(len, 2n+1)

    Residue at(std::size_t k) const { return Residue::from_canonical(coeffs.at(k), modulus); }
};

/// Full row of 2n+1 exact coefficients. Requires n <= kMaxExactRow.
TrinomialRow row_exact(u64 n);

/// First min(len, 2n+1) coefficients of (1+x+x^2)^n mod m.
/// Cost O(len^2 log n).
ModularRow row_mod_prefix(u64 n, u64 m, std::size_t len);

/// Same algorithm over an arbitrary-precision modulus.
std::vector<BigInt> row_mod_prefix(u64 n, const BigInt& m, std::size_t len);

BigInt binom_exact(u64 a, u64 b);

BigInt coeff_via_cosine(u64 n, u64 k);
BigInt coeff_via_convolution(u64 n, u64 k);

/// binom(np-1, k) mod p^2 as (-1)^k (1 - n p H_k), 0 <= k <= p-1.
Residue binom_np_minus1_mod_p2(u64 n, const HarmonicTable& table, u64 k);

/// T(np-1, k) mod p^2 from the closed forms selected by k mod 3.
Residue coeff_closed_mod_p2(u64 n, const HarmonicTable& table, u64 k);

/// coeff_closed_mod_p2 for every k in 0..p-1, with running sums.
std::vector<Residue> closed_forms_mod_p2(u64 n, const HarmonicTable& table);

/// Sum over k <= n/2 of (-1)^k binom(n-k, k), evaluated term by term.
int alt_fib_sum(u64 n);

/// (-1)^k binom((p-1)/2 - k, k) = binom(4k, 2k) / 4^k (mod p), 1 <= k <= (p-1)/4.
std::vector<CheckResult> halfrow_binomial_check(const PrimeContext& ctx);

}  // namespace trinom
