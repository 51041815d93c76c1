#pragma once

#include <string>

#include "report.hpp"

namespace cctool {

/// Runs the paired positive/negative evidence for one separation:
/// finite-cc | bounded-cc | linked:<n> | centred.
Report demo_separation(const std::string& which, uint64_t seed);

/// Runs the checks declared in a JSON config file; see the README for the
/// schema. Throws chaincond::Error{ConfigError} on malformed configs.
Report run_suite(const std::string& config_path, uint64_t seed_override, bool has_seed);

} // namespace cctool
