#pragma once

#include <string>
#include <vector>

#include "colorweyl/config.hpp"

namespace colorweyl {

const std::vector<std::string>& example_names();

// Ready-to-run configs for the bundled corpus. `n` and `field` ("gf<p>" or
// "rational") only apply to h2n; the other instances are fixed over F_3.
ConfigSpec example_config(const std::string& name, int n = 2, const std::string& field = "gf3");

}  // namespace colorweyl
