#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinom/check.hpp"

namespace trinom {

inline constexpr u64 kMaxSweepN = 1000;

enum class Format { jsonl, csv };

struct SweepConfig {
    u64 pmin = 5;
    u64 pmax = 1009;
    u64 nmax = 8;
    std::vector<ClaimId> claims{kAllClaims.begin(), kAllClaims.end()};
    Format format = Format::jsonl;
    unsigned jobs = 1;
    bool fail_fast = false;
    bool summary_only = false;
    // Test hook: add 1 to the right side of every record of this claim.
    std::optional<ClaimId> inject_fault;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError describing the first violated constraint.
void validate(const SweepConfig& config);

struct ClaimTally {
    ClaimId claim;
    std::size_t total = 0;
    std::size_t failed = 0;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<ClaimTally> per_claim;  // enumeration order, only claims with records
    std::optional<CheckResult> first_failure;
};

struct Report {
    std::vector<CheckResult> records;
    Summary summary;

    bool all_passed() const { return summary.failed == 0; }
};

Summary summarize(const std::vector<CheckResult>& records);

/// Every selected claim for a single prime and n = 1..nmax, sorted.
std::vector<CheckResult> run_prime(u64 p, const SweepConfig& config);

/// Runs the sweep across config.jobs worker threads, one prime per task.
/// The result is identical for every worker count.
Report run_sweep(const SweepConfig& config);

/// One record per (claim, p, n) for claims reported per k.
std::vector<CheckResult> collapse_per_k(const std::vector<CheckResult>& records);

void render(const Report& report, Format format, std::ostream& out);
std::string render(const Report& report, Format format);

}  // namespace trinom
