#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pds/analytic.hpp"

namespace pds {

// One verified instance of a registered identity.
struct IdentityReport {
    std::string id;
    std::string params;           // "k=4 c=3 d=8 A=char:k=4,i=1 ..."
    std::string mode;             // "exact" | "numeric"
    std::string residual_exact;   // exact literal (exact mode), else empty
    double residual_mag = 0.0;    // |residual| (numeric mode; 0/1-ish for exact)
    bool pass = false;
    double tail = 0.0;            // achieved series tail (numeric mode)
    double elapsed_ms = 0.0;
};

struct IdentityInfo {
    std::string id;
    std::string anchor;           // human-readable description of the identity
    std::string mode;
    double tolerance;             // numeric mode
    std::string note;             // deviations / domain description
};

struct CatalogOptions {
    int threads = 1;              // 1 = serial reference path
    double tolerance_scale = 1.0; // multiplies every numeric tolerance
    SeriesBudget budget;          // base budget for series evaluators
};

// Registered identities, in registry order.
const std::vector<IdentityInfo>& catalog_info();

// Expected id list; the registry self-test cross-references against it.
const std::vector<std::string>& catalog_manifest();

// Run one identity over its full declared parameter domain.
std::vector<IdentityReport> run_case(const std::string& id, const CatalogOptions& opt);

// Run every identity whose id matches the glob (e.g. "E*", "N1?", "N_cauchy");
// mode_filter: "", "exact" or "numeric". Reports come back sorted by
// (id, params) regardless of thread count.
std::vector<IdentityReport> run_suite(const std::string& filter, const std::string& mode_filter,
                                      const CatalogOptions& opt);

// Newline-delimited JSON object for a report.
std::string report_json(const IdentityReport& r);

// Simple glob match (* and ?).
bool glob_match(const std::string& pattern, const std::string& text);

} // namespace pds
