#pragma once

#include <string>

#include "colorweyl/config.hpp"
#include "colorweyl/report.hpp"

namespace colorweyl {

struct RunResult {
    Report report;
    int exit_code = 0;
};

// Builds the instance for the config's field and runs the selected checks.
// `checks_override` is a comma-separated id list replacing the config's
// selection (budgets of matching config lines are kept); empty means the
// config's checks, or all known checks when the config names none. Throws
// Error for anything that maps to exit code 2.
RunResult run_config(const ConfigSpec& cfg, const std::string& label,
                     const std::string& checks_override, unsigned long long rng_seed);

// parse-and-build sanity pass without running checks; throws on problems
void validate_config(const ConfigSpec& cfg);

}  // namespace colorweyl
