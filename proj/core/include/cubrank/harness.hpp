#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubrank/norms.hpp"
#include "cubrank/numeric.hpp"

namespace cubrank {

struct ScanConfig {
    std::uint64_t max_conductor = 0;  // inclusive; must be >= 7
    int k_max = 1;                    // moments k = 1..k_max
    int shard_count = 1;
    std::string checkpoint_path;      // empty disables checkpointing
    std::string output_path;          // empty disables report file output
    bool emit_per_field = false;
    std::string per_field_path;       // defaults to output_path + ".fields.csv"

    // Conductors processed between checkpoint writes.
    std::uint64_t checkpoint_interval = 2048;
    // Stop after this many conductors across all shards (0 = run to the end).
    // Testing/ops hook for exercising checkpoint resume.
    std::uint64_t limit_conductors = 0;
};

/// Aggregated scan output. Histogram and moment sums are exact integers;
/// densities and moments are derived at report time. wall_time_sec is
/// informational and never serialized.
struct MomentReport {
    std::uint64_t field_count = 0;
    std::uint64_t max_conductor = 0;
    std::map<int, std::uint64_t> histogram;       // s -> field count
    std::map<int, BigInt> moment_sums;            // k -> sum over fields of 3^{k s}
    std::map<int, double> empirical_density;      // s -> histogram[s] / field_count
    std::map<int, double> empirical_moment;       // k -> moment_sums[k] / field_count
    std::map<int, double> predicted_density;      // same keys as histogram
    std::map<int, double> predicted_moment;       // k -> (N(k+1,3) - N(k,3)) / 3^k
    std::map<int, double> delta_density;          // empirical - predicted
    std::map<int, double> delta_moment;
    double wall_time_sec = 0.0;
};

bool operator==(const MomentReport& a, const MomentReport& b);

struct ScanResult {
    bool complete = false;  // false when stopped by limit_conductors
    MomentReport report;    // valid only when complete
};

/// Enumerate all fields with conductor <= max_conductor, compute the rank of
/// each, aggregate. Deterministic: identical report bodies for any shard
/// count; resumable from the checkpoint file. Throws IoError on bad paths.
ScanResult scan(const ScanConfig& cfg);

/// Stable-key JSON body of a report (excludes wall time).
std::string report_to_json(const MomentReport& report);

/// Inverse of report_to_json for the serialized fields; exact moment sums are
/// not part of the wire format. Throws ParseError.
MomentReport report_from_json(const std::string& text);

struct CrosscheckMismatch {
    std::uint64_t conductor = 0;
    std::string detail;
};

struct CrosscheckReport {
    std::uint64_t rows = 0;        // data rows consumed
    std::uint64_t conductors = 0;  // distinct conductors checked
    std::uint64_t fields = 0;      // fields compared
    std::vector<CrosscheckMismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

/// Compare computed ranks against a reference CSV with header
/// `conductor,field_index,rk3_class_group`: for each conductor the multiset of
/// s + (r - 1) over our fields must equal the multiset of reference 3-ranks.
/// Multiset comparison sidesteps the non-canonical field ordering of external
/// tables. Throws ParseError / IoError.
CrosscheckReport crosscheck(const std::string& table_path, std::uint64_t max_conductor);

struct VerifySummary {
    std::string kind;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_details;

    bool passed() const { return failures == 0; }
};

/// Character-sum identity over all admissible D <= d_max with at most
/// max_omega prime factors (0 = no limit).
VerifySummary verify_identity(std::uint64_t d_max, int k, int max_omega = 0,
                              CharSumMode mode = CharSumMode::orbit_representatives);

/// Both enumeration methods against the closed-form count, plus size checks.
VerifySummary verify_combinatorics(int p, int k);

/// Cubic reciprocity laws on random pairs of primary primes with distinct
/// split norms below max_norm; seeded for reproducibility.
VerifySummary verify_reciprocity(int pairs, std::uint64_t seed, std::uint64_t max_norm);

}  // namespace cubrank
