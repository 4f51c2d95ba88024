#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsimple/bounds.hpp"
#include "nonsimple/classifier.hpp"

namespace nonsimple {

enum class HeightMode { parameter, j_proxy };

struct ScanConfig {
    FamilySpec family;
    unsigned long B_max = 1;
    unsigned long P_max = 3;
    std::vector<unsigned> k_test = default_k_test();
    HeightMode height_mode = HeightMode::parameter;
    unsigned workers = 1;
    std::string cache_path; // empty: no cache
    std::string out_path;   // empty: no CSV written

    explicit ScanConfig(FamilySpec fam) : family(std::move(fam)) {}
};

struct ScanRecord {
    Rat t;
    Int H_t;
    std::optional<Int> H_j; // absent for degenerate parameters
    Classification::Status status = Classification::Status::degenerate;
    std::optional<unsigned long> certifying_prime;
    unsigned long primes_tested = 0;
};

struct ScanStats {
    unsigned long computed = 0;
    unsigned long cache_hits = 0;
};

/// Classifies every t with H(t) <= B_max (j_proxy mode instead keeps the
/// non-degenerate t with H_j <= B_max). Results are sorted by (H_t, t) and do
/// not depend on the worker count. The cache is consulted before any
/// classification and appended after each new one.
std::vector<ScanRecord> run_scan(const ScanConfig& config, ScanStats* stats = nullptr);

std::string status_name(Classification::Status s);

/// CSV columns: t, H_t, H_j, status, certifying_prime, primes_tested.
void write_csv(const std::vector<ScanRecord>& records, const std::string& path);
std::vector<ScanRecord> read_csv(const std::string& path);

struct ReportRow {
    unsigned long B = 0;
    unsigned long candidates = 0;
    unsigned long certified = 0;
    unsigned long total = 0;
    std::optional<double> total_bound_log; // absent below the case thresholds
    double comparison_log = 0;
};

struct ScanReport {
    std::vector<ReportRow> rows;
    std::optional<double> kappa_emp; // absent when no grid point has a candidate
};

/// Census counts along the grid (by H_t) plus the bound curves, and the
/// fitted exponent of log(1 + candidates) against log log B over points with
/// at least one candidate.
ScanReport report(const std::vector<ScanRecord>& records,
                  const std::vector<unsigned long>& B_grid, const BoundParams& params);

/// "f = c4,c3,...,c0" coefficient line (descending) plus optional
/// "label = ..."; '#' starts a comment.
FamilySpec load_family_file(const std::string& path);

/// Coefficients from "1,0,0,0,1"-style text, descending order.
Poly parse_coeff_list(const std::string& text);

} // namespace nonsimple
