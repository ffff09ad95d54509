// trinom-verify: sweep primes and n, check every selected congruence and
// write one record per instance.
//
// Exit codes: 0 all records pass, 1 at least one failure, 2 usage or
// internal error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trinom/sweep.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<trinom::ClaimId> parse_claims(const std::vector<std::string>& names) {
    std::vector<trinom::ClaimId> out;
    for (const auto& name : names) {
        if (name == "all")
            return {trinom::kAllClaims.begin(), trinom::kAllClaims.end()};
        auto id = trinom::parse_claim(name);
        if (!id)
            throw trinom::ConfigError("unknown claim '" + name + "'");
        out.push_back(*id);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify trinomial-coefficient and harmonic-number congruences over prime ranges"};

    trinom::SweepConfig config;
    std::vector<std::string> claim_names{"all"};
    std::string format = "jsonl";
    std::string out_path;

    app.add_option("--pmin", config.pmin, "Smallest prime to check (>= 5)")->capture_default_str();
    app.add_option("--pmax", config.pmax, "Largest prime to check")->capture_default_str();
    app.add_option("--nmax", config.nmax, "Check n = 1..NMAX")->capture_default_str();
    app.add_option("--claims", claim_names, "Comma-separated claim names, or 'all'")
        ->delimiter(',');
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Output file (default: standard output)");
    app.add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
    app.add_flag("--fail-fast", config.fail_fast, "Stop after the first failing record");
    app.add_flag("--summary-only", config.summary_only,
                 "Collapse per-k records into one record per (claim, p, n)");
#ifdef TRINOM_FAULT_INJECTION
    std::string fault;
    app.add_option("--inject-fault", fault, "Perturb the right side of this claim (test build)");
#endif

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        config.format = format == "csv" ? trinom::Format::csv : trinom::Format::jsonl;
        config.claims = parse_claims(claim_names);
#ifdef TRINOM_FAULT_INJECTION
        if (!fault.empty()) {
            config.inject_fault = trinom::parse_claim(fault);
            if (!config.inject_fault)
                throw trinom::ConfigError("unknown claim '" + fault + "'");
        }
#endif
        trinom::validate(config);

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw std::runtime_error("cannot open " + out_path + " for writing");
        }
        std::ostream& out = out_path.empty() ? std::cout : file;

        const trinom::Report report = trinom::run_sweep(config);
        trinom::render(report, config.format, out);
        out.flush();
        if (!out)
            throw std::runtime_error("write failed");
        return report.all_passed() ? 0 : kExitFailure;
    } catch (const trinom::ConfigError& e) {
        std::cerr << "trinom-verify: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "trinom-verify: internal error: " << e.what() << '\n';
        return kExitUsage;
    }
}
