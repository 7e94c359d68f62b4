#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsc/report.hpp"

namespace qsc {

// A known discrepancy between a bundled reference claim and what the
// implementation actually computes. Shipping these in a whitelist keeps the
// verification honest: mismatches are reported with corrected values instead
// of being papered over or failing the run.
struct DiscrepancyEntry {
    std::string check_id;
    std::string reason;
    ojson corrected;
};

using Whitelist = std::map<std::string, DiscrepancyEntry>;

// The embedded copy of data/known_discrepancies.json. A unit test keeps the
// two in sync.
Whitelist default_whitelist();
Whitelist parse_whitelist(const ojson& doc);
Whitelist load_whitelist(const std::string& path);

struct CheckResult {
    std::string id;       // table1_row1..3, table2_row1..3, example1, example2
    std::string claimed;  // the bundled reference value, rendered as text
    std::string computed;
    std::string status;   // match | mismatch-flagged | bound-only
    bool whitelisted = false;
    ojson detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool ok = false; // every check is match, or mismatch-flagged and whitelisted
};

// Recomputes every bundled reference claim from scratch: three rows of
// dual-containing codes, three rows of augmented pairs, the coset listing of
// the first worked example, and the full synchronizable-code pipeline of the
// second. Each check appears exactly once.
VerificationReport run_reference_checks(const Whitelist& wl);

ojson verification_report_json(const VerificationReport& rep);

} // namespace qsc
