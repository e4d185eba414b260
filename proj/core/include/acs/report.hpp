#pragma once

#include "acs/betti3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acs {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kJsonSchemaVersion = 1;

// One row of the minimal-Betti-sum table (even dimensions). min_betti_sum is
// empty for dimensions where the implemented obstructions leave the value
// open; bracket_low/high then hold the honest bracket.
struct FigureRow {
    unsigned long dim;
    std::optional<int> min_betti_sum;
    int bracket_low = 0;
    int bracket_high = 0;
    std::string source;   // which result pins the value
    std::string witness;  // realizing manifold (family), when one is known
};
std::vector<FigureRow> figure_rows(unsigned long max_dim);

struct ScanReport {
    unsigned long min_dim;
    unsigned long max_dim;
    std::vector<Betti3Record> rows;  // one per dimension, no gaps
    std::string tool_version;
    std::vector<std::string> ruleset;  // distinct rules that fired
    bool regressions_ok;  // pinned facts: dim 4 exists, every 8k <= 1024 ruled out
};
// Analyzes every dimension 1..max_dim. parallel fans dimensions out across
// hardware threads after sequentially precomputing the Bernoulli cache;
// output is order-restored and identical to the sequential scan.
ScanReport scan(unsigned long max_dim, bool parallel = false);

std::string to_json(const ScanReport& report);
std::string to_tsv(const ScanReport& report);
std::string to_json(const std::vector<FigureRow>& rows);
std::string to_tsv(const std::vector<FigureRow>& rows);
std::string to_json(const Betti3Record& rec);

// Theorem audits: every consistency check the library's results rest on,
// run at fixed sweeps. Failure details name the offending inputs and values.
struct AuditResult {
    std::string name;
    std::string rule;  // the mathematical fact being checked
    bool passed;
    std::string detail;  // empty when passed
};
std::vector<AuditResult> run_audits();

}  // namespace acs
