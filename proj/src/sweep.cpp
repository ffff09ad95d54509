#include "trinom/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "trinom/congruence.hpp"
#include "trinom/harmonic.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

namespace {

class ClaimSet {
public:
    explicit ClaimSet(const std::vector<ClaimId>& claims) {
        for (ClaimId c : claims)
            bits_[static_cast<std::size_t>(c)] = true;
    }
    bool has(ClaimId c) const { return bits_[static_cast<std::size_t>(c)]; }
    template <class... C>
    bool any(C... c) const {
        return (has(c) || ...);
    }

private:
    std::array<bool, kAllClaims.size()> bits_{};
};

bool reported_per_k(ClaimId id) {
    switch (id) {
    case ClaimId::Cor4_Eq11:
    case ClaimId::TripleSum_a:
    case ClaimId::PropP_CC:
    case ClaimId::HalfRow_Binomial:
    case ClaimId::Lemma_CONG0:
    case ClaimId::Lemma_CONG1:
        return true;
    default:
        return false;
    }
}

}  // namespace

void validate(const SweepConfig& config) {
    if (config.pmin < 5)
        throw ConfigError("--pmin must be at least 5");
    if (config.pmin > config.pmax)
        throw ConfigError("--pmin must not exceed --pmax");
    if (config.pmax > kMaxPrime)
        throw ConfigError("--pmax must not exceed " + std::to_string(kMaxPrime));
    if (config.nmax < 1 || config.nmax > kMaxSweepN)
        throw ConfigError("--nmax must lie in [1, " + std::to_string(kMaxSweepN) + "]");
    if (config.claims.empty())
        throw ConfigError("at least one claim must be selected");
    if (config.jobs < 1)
        throw ConfigError("--jobs must be positive");
}

std::vector<CheckResult> run_prime(u64 p, const SweepConfig& config) {
    const PrimeContext ctx(p);
    const ClaimSet sel(config.claims);
    std::vector<CheckResult> out;
    auto take = [&](CheckResult r) {
        if (sel.has(r.claim))
            out.push_back(std::move(r));
    };
    auto take_all = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs)
            take(std::move(r));
    };

    std::optional<HarmonicTable> table;
    if (sel.any(ClaimId::Thm2_Eq6, ClaimId::Thm2_Eq7, ClaimId::PropP_CC, ClaimId::Lemma_GL0,
                ClaimId::Lemma_GL, ClaimId::Lemma_GL2, ClaimId::Lemma_CONG0, ClaimId::Lemma_CONG1))
        table.emplace(ctx);

    if (sel.has(ClaimId::Thm2_Eq6))
        take(check_thm2_eq6(*table));
    if (sel.has(ClaimId::Thm2_Eq7))
        take(check_thm2_eq7(*table));
    if (sel.has(ClaimId::HalfRow_Binomial))
        take_all(halfrow_binomial_check(ctx));
    if (sel.has(ClaimId::Babbage))
        take(check_babbage(ctx));
    if (sel.has(ClaimId::Wolstenholme))
        take(check_wolstenholme(ctx));
    if (sel.has(ClaimId::Morley))
        take(check_morley(ctx));
    if (sel.has(ClaimId::Carlitz))
        take(check_carlitz(ctx));
    if (sel.any(ClaimId::Lemma_GL0, ClaimId::Lemma_GL, ClaimId::Lemma_GL2))
        take_all(check_half_third_sixth(*table));
    if (sel.any(ClaimId::Lemma_CONG0, ClaimId::Lemma_CONG1))
        take_all(check_reflections(*table));
    if (sel.any(ClaimId::Lemma_C1b, ClaimId::Lemma_C1c, ClaimId::Lemma_C2b, ClaimId::Lemma_C2c,
                ClaimId::Lemma_C3, ClaimId::Lemma_C3b, ClaimId::Lemma_H0, ClaimId::Lemma_H1,
                ClaimId::Lemma_H2, ClaimId::Lemma_H3))
        take_all(check_progression_lemmas(ctx));

    for (u64 n = 1; n <= config.nmax; ++n) {
        if (sel.any(ClaimId::Thm1_Eq2, ClaimId::Thm1_Eq4, ClaimId::Prop3_Eq9, ClaimId::Prop3_Eq10,
                    ClaimId::TripleSum_a, ClaimId::PropP_CC)) {
            const ModularRow row = np_minus1_row(ctx, n);
            if (sel.has(ClaimId::Thm1_Eq2))
                take(check_thm1_eq2(ctx, n, row));
            if (sel.has(ClaimId::Thm1_Eq4))
                take(check_thm1_eq4(ctx, n, row));
            if (sel.has(ClaimId::Prop3_Eq9))
                take(check_prop3_eq9(ctx, n, row));
            if (sel.has(ClaimId::Prop3_Eq10))
                take(check_prop3_eq10(ctx, n, row));
            if (sel.has(ClaimId::TripleSum_a))
                take_all(check_triple_sum(ctx, n, row));
            if (sel.has(ClaimId::PropP_CC))
                take_all(check_closed_forms(*table, n, row));
        }
        if (sel.has(ClaimId::Cor4_Eq11))
            take_all(check_cor4_eq11(ctx, n));
        if (sel.has(ClaimId::Glaisher))
            take(check_glaisher(ctx, n));
    }

    if (config.inject_fault) {
        for (auto& r : out) {
            if (r.claim != *config.inject_fault)
                continue;
            r.rhs += Residue(1, r.modulus);
            r.pass = r.lhs == r.rhs;
        }
    }

    std::stable_sort(out.begin(), out.end(), report_less);
    return out;
}

std::vector<CheckResult> collapse_per_k(const std::vector<CheckResult>& records) {
    std::vector<CheckResult> out;
    std::size_t i = 0;
    while (i < records.size()) {
        const CheckResult& head = records[i];
        if (!reported_per_k(head.claim) || !head.k) {
            out.push_back(head);
            ++i;
            continue;
        }
        std::size_t j = i;
        const CheckResult* witness = nullptr;
        while (j < records.size() && records[j].claim == head.claim && records[j].p == head.p &&
               records[j].n == head.n && records[j].k) {
            if (!witness && !records[j].pass)
                witness = &records[j];
            ++j;
        }
        if (!witness)
            witness = &records[j - 1];
        CheckResult agg = *witness;
        agg.k.reset();
        out.push_back(agg);
        i = j;
    }
    return out;
}

Summary summarize(const std::vector<CheckResult>& records) {
    Summary s;
    std::array<ClaimTally, kAllClaims.size()> tallies{};
    for (std::size_t i = 0; i < kAllClaims.size(); ++i)
        tallies[i].claim = kAllClaims[i];
    for (const auto& r : records) {
        ++s.total;
        auto& t = tallies[static_cast<std::size_t>(r.claim)];
        ++t.total;
        if (r.pass) {
            ++s.passed;
        } else {
            ++s.failed;
            ++t.failed;
            if (!s.first_failure)
                s.first_failure = r;
        }
    }
    for (const auto& t : tallies)
        if (t.total)
            s.per_claim.push_back(t);
    return s;
}

Report run_sweep(const SweepConfig& config) {
    validate(config);
    const std::vector<u64> primes = sieve_primes(config.pmin, config.pmax);
    std::vector<std::vector<CheckResult>> per_prime(primes.size());

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failing{kNone};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= primes.size())
                return;
            if (config.fail_fast && i > first_failing.load())
                continue;
            try {
                per_prime[i] = run_prime(primes[i], config);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
            const bool failed = std::any_of(per_prime[i].begin(), per_prime[i].end(),
                                            [](const CheckResult& r) { return !r.pass; });
            if (config.fail_fast && failed) {
                std::size_t cur = first_failing.load();
                while (i < cur && !first_failing.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    const unsigned jobs = std::min<std::size_t>(config.jobs, std::max<std::size_t>(primes.size(), 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);

    Report report;
    bool stopped = false;
    for (auto& chunk : per_prime) {
        auto records = config.summary_only ? collapse_per_k(chunk) : std::move(chunk);
        for (auto& r : records) {
            stopped = config.fail_fast && !r.pass;
            report.records.push_back(std::move(r));
            if (stopped)
                break;
        }
        if (stopped)
            break;
    }
    report.summary = summarize(report.records);
    return report;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson record_json(const CheckResult& r) {
    ojson j;
    j["claim"] = std::string(to_string(r.claim));
    j["p"] = r.p;
    j["n"] = r.n ? ojson(*r.n) : ojson(nullptr);
    j["k"] = r.k ? ojson(*r.k) : ojson(nullptr);
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["pass"] = r.pass;
    return j;
}

std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
    const Summary& s = report.summary;
    if (format == Format::jsonl) {
        for (const auto& r : report.records)
            out << record_json(r).dump() << '\n';
        ojson claims = ojson::object();
        for (const auto& t : s.per_claim)
            claims[std::string(to_string(t.claim))] = {
                {"total", t.total}, {"passed", t.total - t.failed}, {"failed", t.failed}};
        ojson summary;
        summary["total"] = s.total;
        summary["passed"] = s.passed;
        summary["failed"] = s.failed;
        summary["claims"] = std::move(claims);
        summary["first_failure"] = s.first_failure ? record_json(*s.first_failure) : ojson(nullptr);
        out << ojson{{"summary", std::move(summary)}}.dump() << '\n';
    } else {
        out << "claim,p,n,k,modulus,lhs,rhs,pass\n";
        for (const auto& r : report.records)
            out << to_string(r.claim) << ',' << r.p << ',' << opt_str(r.n) << ',' << opt_str(r.k)
                << ',' << r.modulus << ',' << r.lhs.str() << ',' << r.rhs.str() << ','
                << (r.pass ? "true" : "false") << '\n';
        out << "# summary total=" << s.total << " passed=" << s.passed << " failed=" << s.failed
            << " first_failure=";
        if (s.first_failure) {
            const auto& f = *s.first_failure;
            out << to_string(f.claim) << ":p=" << f.p << ":n=" << opt_str(f.n)
                << ":k=" << opt_str(f.k);
        } else {
            out << "none";
        }
        out << '\n';
    }
}

std::string render(const Report& report, Format format) {
    std::ostringstream os;
    render(report, format, os);
    return os.str();
}

}  // namespace trinom
