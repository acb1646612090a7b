#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace latpoly {

// One checked case. Status "fail" is reserved for proved statements;
// conjecture-level equality lands in "finding".
struct VerificationRecord {
    std::string check;
    std::string case_id;
    std::string status;  // pass | fail | finding
    nlohmann::ordered_json values;
    double millis = 0.0;
};

struct CheckParams {
    int max_size = 5;    // partition size budget
    int box = 4;         // bounding box for raw diagram scans
    int max_cells = 5;   // cell budget for raw diagram scans
    int kmax = 3;        // hole budget where applicable
    int trials = 200;    // randomized trials per case
    std::uint64_t seed = 20260809;
};

struct CaseTask {
    std::string id;
    double cost = 1.0;
    std::function<VerificationRecord()> run;
};

extern const std::vector<std::string> kAllChecks;

bool is_known_check(const std::string& check);
CheckParams default_params(const std::string& check);
std::vector<CaseTask> make_check_cases(const std::string& check,
                                       const CheckParams& params);

struct SuiteOptions {
    std::vector<std::string> checks;
    // Negative overrides keep each check's own default budget.
    int max_size = -1;
    int kmax = -1;
    int trials = -1;
    std::uint64_t seed = 20260809;
    std::string out_path;  // JSONL, appended; empty = no persistence
    std::string csv_path;
    int jobs = 0;
    double cost_ceiling = 1e9;
};

struct SuiteSummary {
    std::vector<VerificationRecord> records;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t findings = 0;
    std::int64_t skipped_resume = 0;
};

// Deterministic enumeration, chunked parallel execution, ordered commit to
// the JSONL report. Completed case ids found in an existing report are never
// recomputed.
SuiteSummary run_suite(const SuiteOptions& opts);

std::string format_table(const SuiteSummary& summary, bool show_all = false);
void write_csv(const std::string& path, const std::vector<VerificationRecord>& records);

nlohmann::ordered_json record_to_json(const VerificationRecord& r);

// Stable 64-bit hash used to derive per-case seeds.
std::uint64_t fnv1a(const std::string& s);

}  // namespace latpoly
