// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// usage: acceptance <trinom-verify> <trinom-verify-faulty>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "process.hpp"
#include "trinom/congruence.hpp"
#include "trinom/harmonic.hpp"
#include "trinom/sweep.hpp"
#include "trinom/trinomial.hpp"

using namespace trinom;

namespace {

// Pinned thresholds.
constexpr double kRowSweepSeconds = 300.0;
constexpr double kBinomialSumSeconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Tally {
public:
    void fail(const std::string& what) {
        if (ok_)
            first_ = what;
        ok_ = false;
        ++failures_;
    }
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (!cond)
            fail(what);
    }
    void expect(const CheckResult& r) {
        std::ostringstream os;
        os << to_string(r.claim) << " p=" << r.p;
        if (r.n)
            os << " n=" << *r.n;
        if (r.k)
            os << " k=" << *r.k;
        os << " lhs=" << r.lhs.value() << " rhs=" << r.rhs.value();
        expect(r.pass, os.str());
    }
    template <class Range>
    void expect_all(const Range& rs) {
        for (const auto& r : rs)
            expect(r);
    }
    Outcome outcome(std::string extra = {}) const {
        std::ostringstream os;
        os << checks_ << " checks";
        if (!extra.empty())
            os << ", " << extra;
        if (!ok_)
            os << ", " << failures_ << " failed, first: " << first_;
        return {ok_, os.str()};
    }

private:
    bool ok_ = true;
    std::size_t checks_ = 0, failures_ = 0;
    std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

Outcome row_p2_sweep() {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    for (u64 p : sieve_primes(5, 1009)) {
        PrimeContext ctx(p);
        for (u64 n = 1; n <= 8; ++n) {
            auto row = np_minus1_row(ctx, n);
            t.expect(check_thm1_eq2(ctx, n, row));
            t.expect(check_thm1_eq4(ctx, n, row));
        }
    }
    double s = seconds_since(t0);
    t.expect(s <= kRowSweepSeconds, "runtime " + fmt_seconds(s) + " over budget");
    return t.outcome(fmt_seconds(s) + " single-threaded (budget 300s)");
}

Outcome binomial_sums() {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    for (u64 p : sieve_primes(5, 2003)) {
        HarmonicTable table{PrimeContext(p)};
        t.expect(check_thm2_eq6(table));
        t.expect(check_thm2_eq7(table));
    }
    double s = seconds_since(t0);
    t.expect(s <= kBinomialSumSeconds, "runtime " + fmt_seconds(s) + " over budget");
    return t.outcome(fmt_seconds(s) + " (budget 60s)");
}

Outcome row_p2sq_sweep() {
    Tally t;
    for (u64 p : sieve_primes(5, 1009)) {
        PrimeContext ctx(p);
        for (u64 n = 1; n <= 8; ++n) {
            auto row = np_minus1_row(ctx, n);
            t.expect(check_prop3_eq9(ctx, n, row));
            t.expect(check_prop3_eq10(ctx, n, row));
        }
    }
    return t.outcome();
}

Outcome full_row_sweep() {
    Tally t;
    for (u64 p : sieve_primes(5, 499)) {
        PrimeContext ctx(p);
        for (u64 n = 1; n <= 3; ++n) {
            auto rs = check_cor4_eq11(ctx, n);
            t.expect(rs.size() == p, "Cor4 record count at p=" + std::to_string(p));
            t.expect_all(rs);
        }
    }
    return t.outcome();
}

Outcome lemmas() {
    Tally t;
    for (u64 p : sieve_primes(5, 2003)) {
        PrimeContext ctx(p);
        HarmonicTable table(ctx);
        t.expect_all(check_half_third_sixth(table));
        t.expect_all(check_reflections(table));
        auto prog = check_progression_lemmas(ctx);
        t.expect(prog.size() == 5, "progression lemma count at p=" + std::to_string(p));
        t.expect_all(prog);
    }
    return t.outcome();
}

Outcome classical() {
    Tally t;
    for (u64 p : sieve_primes(5, 499)) {
        PrimeContext ctx(p);
        t.expect(check_babbage(ctx));
        t.expect(check_wolstenholme(ctx));
        for (u64 n = 1; n <= 8; ++n)
            t.expect(check_glaisher(ctx, n));
        t.expect(check_morley(ctx));
        t.expect(check_carlitz(ctx));
    }
    return t.outcome();
}

Outcome engines() {
    Tally t;
    for (u64 n = 0; n <= 60; ++n) {
        auto exact = row_exact(n).coeffs;
        BigInt above = 1;
        for (u64 i = 0; i < n; ++i)
            above *= 3;
        auto modular = row_mod_prefix(n, above + 1, 2 * n + 1);
        t.expect(modular.size() == exact.size(), "row length n=" + std::to_string(n));
        for (u64 k = 0; k <= 2 * n && k < modular.size(); ++k) {
            const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            t.expect(coeff_via_cosine(n, k) == exact[k], "cosine" + at);
            t.expect(coeff_via_convolution(n, k) == exact[k], "convolution" + at);
            t.expect(modular[k] == exact[k], "row_mod_prefix" + at);
        }
    }
    for (u64 p : sieve_primes(5, 199)) {
        PrimeContext ctx(p);
        HarmonicTable table(ctx);
        for (u64 n = 1; n <= 3; ++n) {
            auto row = np_minus1_row(ctx, n);
            for (u64 k = 0; k < p; ++k)
                t.expect(coeff_closed_mod_p2(n, table, k) == row.at(k),
                         "closed form p=" + std::to_string(p) + " n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
        }
    }
    return t.outcome();
}

Outcome structure() {
    Tally t;
    BigInt three_pow = 1;
    for (u64 n = 0; n <= 200; ++n) {
        auto row = row_exact(n).coeffs;
        BigInt sum = 0, alt = 0;
        bool palindrome = true;
        for (std::size_t k = 0; k < row.size(); ++k) {
            palindrome = palindrome && row[k] == row[row.size() - 1 - k];
            sum += row[k];
            alt += k % 2 ? -row[k] : row[k];
        }
        const std::string at = " n=" + std::to_string(n);
        t.expect(palindrome, "palindrome" + at);
        t.expect(sum == three_pow, "row sum" + at);
        t.expect(alt == 1, "alternating sum" + at);
        three_pow *= 3;
    }
    for (u64 p : sieve_primes(5, 499)) {
        PrimeContext ctx(p);
        for (u64 n = 1; n <= 3; ++n)
            t.expect_all(check_triple_sum(ctx, n, np_minus1_row(ctx, n)));
    }
    return t.outcome();
}

Outcome spot_values() {
    Tally t;
    t.expect(row_exact(6).coeffs[6] == 141, "T(6) = 141");
    t.expect(coeff_via_cosine(6, 6) == 141 && coeff_via_convolution(6, 6) == 141,
             "T(6) via cosine/convolution");

    auto r7 = check_thm1_eq2(PrimeContext(7), 1);
    t.expect(r7.lhs.value() == 43 && r7.rhs.value() == 43 && r7.modulus == 49,
             "binom(6,6)_2 = 43 mod 49");

    PrimeContext p5(5);
    auto c5 = row_mod_prefix(4, 25, 5);
    t.expect(row_exact(4).coeffs[2] == 10, "binom(4,2)_2 = 10");
    const Residue minus_five_halves_q3 = p5.lift_times_p(rat_mod(-1, 2, 5) * fermat_quotient(3, p5));
    t.expect(c5.at(2) == minus_five_halves_q3 && c5.at(2).value() == 10,
             "binom(4,2)_2 = -(5/2) q_3(5) mod 25");

    auto e6 = check_thm2_eq6(HarmonicTable(p5));
    t.expect(e6.lhs.value() == 1 && e6.pass, "sum binom(2k,k) H_k = 1 mod 5");

    PrimeContext p11(11);
    t.expect(fermat_quotient(3, p11).value() == 0, "q_3(11) = 0");
    t.expect(row_exact(10).coeffs[10] % 121 == 120, "binom(10,10)_2 = -1 mod 121 (exact)");
    t.expect(row_mod_prefix(10, 121, 11).at(10).value() == 120, "binom(10,10)_2 = -1 mod 121");

    auto e7 = check_thm2_eq7(HarmonicTable(PrimeContext(13)));
    t.expect(e7.lhs.value() == 9 && e7.rhs.value() == 9, "binom(4k,2k) harmonic sum at p=13 both sides 9");
    return t.outcome();
}

Outcome cli_contract(const std::string& cli, const std::string& faulty) {
    using testing_support::run;
    Tally t;
    const std::string args = " --pmin 5 --pmax 101 --nmax 2";
    auto a = run(cli + args + " --jobs 1");
    auto b = run(cli + args + " --jobs 1");
    auto c = run(cli + args + " --jobs 4");
    t.expect(a.exit_code == 0, "all-pass run exit " + std::to_string(a.exit_code));
    t.expect(!a.out.empty() && a.out == b.out, "repeat run differs");
    t.expect(a.out == c.out, "--jobs 4 output differs");

    auto csv1 = run(cli + args + " --format csv --jobs 1");
    auto csv4 = run(cli + args + " --format csv --jobs 3");
    t.expect(csv1.exit_code == 0 && csv1.out == csv4.out, "csv determinism");

    auto bad = run(cli + " --pmin 6 --pmax 5 2>/dev/null");
    t.expect(bad.exit_code == 2, "config error exit " + std::to_string(bad.exit_code));
    auto unknown = run(cli + " --claims Bogus 2>/dev/null");
    t.expect(unknown.exit_code == 2, "unknown claim exit " + std::to_string(unknown.exit_code));

    auto fault = run(faulty + args + " --inject-fault Thm1_Eq2");
    t.expect(fault.exit_code == 1, "fault injection exit " + std::to_string(fault.exit_code));
    auto fault4 = run(faulty + args + " --inject-fault Thm1_Eq2 --jobs 4 --fail-fast");
    auto fault1 = run(faulty + args + " --inject-fault Thm1_Eq2 --jobs 1 --fail-fast");
    t.expect(fault4.exit_code == 1 && fault4.out == fault1.out, "fail-fast determinism");
    return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <trinom-verify> <trinom-verify-faulty>\n";
        return 2;
    }
    const std::string cli = argv[1], faulty = argv[2];

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"1  T(np-1, p-1) and T(np-1, (p-1)/2) mod p^2, p <= 1009, n 1..8", row_p2_sweep},
        {"2  Central binomial harmonic sums mod p, p <= 2003", binomial_sums},
        {"3  T(np^2-1, .) mod p^2, p <= 1009, n 1..8", row_p2sq_sweep},
        {"4  T(np-1, k) mod p^2 for all k < p, p <= 499, n 1..3", full_row_sweep},
        {"5  Lemma sweep, p <= 2003", lemmas},
        {"6  Classical sweep, p <= 499", classical},
        {"7  Engine cross-equivalence", engines},
        {"8  Structural invariants and triple sums", structure},
        {"9  Spot values", spot_values},
        {"10 CLI contract", [&] { return cli_contract(cli, faulty); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << o.detail << ")"
                  << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) + " criteria"
                         : std::string("acceptance: all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
