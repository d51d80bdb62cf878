#pragma once

#include <string>
#include <vector>

#include "colorweyl/theorems.hpp"

namespace colorweyl {

struct Report {
    std::string instance;
    std::vector<CheckRecord> checks;
    unsigned long long rng_seed = 0;
};

enum class ReportFormat { json, table };

// json: stable key order, byte-identical for identical inputs and seed
// (timings are table-only); table: aligned human summary
std::string emit_report(const Report& rep, ReportFormat fmt);

// 0 = all selected checks certified or consistent, 1 = a certified refutation
// with intact hypotheses, 3 = evidence-level verdicts remain
int exit_code_for(const std::vector<CheckRecord>& checks);

}  // namespace colorweyl
