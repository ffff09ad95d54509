#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "trinom/trinomial.hpp"

using namespace trinom;

namespace {

std::vector<u64> to_words(const std::vector<BigInt>& v) {
    std::vector<u64> out;
    for (const auto& x : v)
        out.push_back(x.convert_to<u64>());
    return out;
}

std::vector<u64> reduced(const std::vector<BigInt>& v, u64 m, std::size_t len) {
    std::vector<u64> out;
    for (std::size_t i = 0; i < std::min(len, v.size()); ++i)
        out.push_back(oracle::reduce(v[i], m));
    return out;
}

}  // namespace

TEST_CASE("row_exact small rows") {
    CHECK(to_words(row_exact(0).coeffs) == std::vector<u64>{1});
    CHECK(to_words(row_exact(2).coeffs) == std::vector<u64>{1, 2, 3, 2, 1});
    auto r6 = row_exact(6);
    CHECK(r6.coeffs.size() == 13);
    CHECK(r6.coeffs[6] == 141);
    CHECK(r6.coeffs[3] == 50);
    CHECK(row_exact(10).coeffs[10] == 8953);
    CHECK_THROWS_AS(row_exact(kMaxExactRow + 1), std::invalid_argument);
}

TEST_CASE("row_exact structural invariants") {
    for (unsigned n = 0; n <= 80; ++n) {
        auto row = row_exact(n);
        REQUIRE(row.coeffs.size() == 2 * n + 1);
        CHECK(row.coeffs.front() == 1);
        CHECK(row.coeffs.back() == 1);
        if (n > 0)
            CHECK(row.coeffs[1] == n);
        BigInt sum = 0, alt = 0;
        for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
            CHECK(row.coeffs[k] == row.coeffs[2 * n - k]);
            sum += row.coeffs[k];
            alt += (k % 2 ? -1 : 1) * row.coeffs[k];
        }
        CHECK(sum == oracle::power(3, n));
        CHECK(alt == 1);
    }
}

TEST_CASE("row_exact equals repeated polynomial multiplication") {
    for (unsigned n : {0u, 1u, 5u, 17u, 40u})
        CHECK(row_exact(n).coeffs == oracle::trinomial_row(n));
}

TEST_CASE("row_mod_prefix examples") {
    auto exact6 = row_exact(6).coeffs;
    CHECK(row_mod_prefix(6, 49, 7).coeffs == reduced(exact6, 49, 7));
    CHECK(row_mod_prefix(6, 49, 7).coeffs == std::vector<u64>{1, 6, 21, 1, 41, 28, 43});
    CHECK(row_mod_prefix(24, 25, 5).coeffs == reduced(row_exact(24).coeffs, 25, 5));
    CHECK(row_mod_prefix(24, 25, 5).coeffs == std::vector<u64>{1, 24, 0, 1, 24});
    CHECK(row_mod_prefix(1, 1000, 3).coeffs == std::vector<u64>{1, 1, 1});
    CHECK(row_mod_prefix(0, 7, 5).coeffs == std::vector<u64>{1});
    CHECK(row_mod_prefix(2, 7, 100).coeffs.size() == 5);
    CHECK_THROWS_AS(row_mod_prefix(3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(row_mod_prefix(3, 7, 0), std::invalid_argument);
}

TEST_CASE("row_mod_prefix agrees with the exact row for wide and narrow moduli") {
    const std::vector<u64> moduli{2, 49, 1000003, (u64{1} << 32) + 15, 9223372036854775783ULL};
    for (unsigned n : {3u, 10u, 31u, 64u, 100u}) {
        auto exact = row_exact(n).coeffs;
        for (u64 m : moduli)
            for (std::size_t len : {std::size_t{1}, std::size_t{7}, exact.size()}) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(len);
                CHECK(row_mod_prefix(n, m, len).coeffs == reduced(exact, m, len));
            }
    }
}

TEST_CASE("cosine and convolution coefficients") {
    CHECK(coeff_via_cosine(4, 2) == 10);
    CHECK(coeff_via_cosine(6, 6) == 141);
    CHECK(coeff_via_convolution(4, 2) == 10);
    CHECK(coeff_via_convolution(6, 6) == 141);
    for (u64 n : {0u, 1u, 9u, 30u}) {
        CHECK(coeff_via_cosine(n, 0) == 1);
        CHECK(coeff_via_convolution(n, 2 * n) == 1);
    }
    CHECK_THROWS_AS(coeff_via_cosine(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(coeff_via_convolution(3, 7), std::invalid_argument);
}

TEST_CASE("four engines agree, n <= 60") {
    for (u64 n = 0; n <= 60; ++n) {
        auto exact = row_exact(n).coeffs;
        BigInt big_mod = oracle::power(3, static_cast<unsigned>(n)) + 1;  // above every coefficient
        auto modular = row_mod_prefix(n, big_mod, 2 * n + 1);
        REQUIRE(modular.size() == exact.size());
        for (u64 k = 0; k <= 2 * n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(coeff_via_cosine(n, k) == exact[k]);
            CHECK(coeff_via_convolution(n, k) == exact[k]);
            CHECK(modular[k] == exact[k]);
        }
    }
}

TEST_CASE("binom_np_minus1_mod_p2") {
    HarmonicTable t5{PrimeContext(5)};
    CHECK(binom_np_minus1_mod_p2(1, t5, 0).value() == 1);
    CHECK(binom_np_minus1_mod_p2(1, t5, 2).value() == 6);
    HarmonicTable t7{PrimeContext(7)};
    CHECK(binom_np_minus1_mod_p2(2, t7, 6).value() == oracle::reduce(oracle::binomial(13, 6), 49));

    for (u64 p : sieve_primes(5, 61)) {
        HarmonicTable t{PrimeContext(p)};
        for (u64 n = 1; n <= 3; ++n)
            for (u64 k = 0; k < p; ++k)
                CHECK(binom_np_minus1_mod_p2(n, t, k).value() ==
                      oracle::reduce(oracle::binomial(n * p - 1, k), p * p));
    }
}

TEST_CASE("closed forms mod p^2") {
    CHECK(coeff_closed_mod_p2(1, HarmonicTable(PrimeContext(7)), 6).value() == 43);
    CHECK(coeff_closed_mod_p2(1, HarmonicTable(PrimeContext(5)), 4).value() == 19);
    CHECK(coeff_closed_mod_p2(1, HarmonicTable(PrimeContext(5)), 2).value() == 10);
    CHECK_THROWS_AS(coeff_closed_mod_p2(1, HarmonicTable(PrimeContext(5)), 5), std::out_of_range);

    // against the exact row where it is small enough to build
    for (u64 p : sieve_primes(5, 31)) {
        HarmonicTable t{PrimeContext(p)};
        for (u64 n = 1; n <= 3; ++n) {
            auto exact = row_exact(n * p - 1).coeffs;
            auto batch = closed_forms_mod_p2(n, t);
            for (u64 k = 0; k < p; ++k) {
                CHECK(coeff_closed_mod_p2(n, t, k).value() == oracle::reduce(exact[k], p * p));
                CHECK(batch[k] == coeff_closed_mod_p2(n, t, k));
            }
        }
    }
}

TEST_CASE("alt_fib_sum follows the period-6 pattern") {
    CHECK(alt_fib_sum(0) == 1);
    CHECK(alt_fib_sum(2) == 0);
    CHECK(alt_fib_sum(6) == 1);
    for (u64 n = 0; n <= 300; ++n) {
        int expected = n % 3 == 2 ? 0 : ((n / 3) % 2 ? -1 : 1);
        CHECK(alt_fib_sum(n) == expected);
    }
}

TEST_CASE("halfrow_binomial_check") {
    auto r5 = halfrow_binomial_check(PrimeContext(5));
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].lhs.value() == 4);
    CHECK(r5[0].rhs.value() == 4);

    auto r13 = halfrow_binomial_check(PrimeContext(13));
    REQUIRE(r13.size() == 3);
    CHECK(r13[2].k == 3u);
    CHECK(r13[2].lhs.value() == 12);
    CHECK(r13[2].rhs.value() == 12);

    CHECK(halfrow_binomial_check(PrimeContext(7)).size() == 1);
    for (u64 p : sieve_primes(5, 500))
        for (const auto& r : halfrow_binomial_check(PrimeContext(p)))
            CHECK(r.pass);
}
