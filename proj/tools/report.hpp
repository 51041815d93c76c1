#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cctool {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

/// One check: returns details, throws to fail. Thrown chaincond::Error
/// messages land in the details.
struct Check {
    std::string name;
    std::function<nlohmann::json()> run;
};

class Report {
public:
    Report(std::string command, nlohmann::json parameters, uint64_t seed)
        : command_(std::move(command)), parameters_(std::move(parameters)), seed_(seed) {}

    void add(CheckResult result) { results_.push_back(std::move(result)); }

    /// Runs the checks, independent ones concurrently (capped by
    /// CHAINCOND_THREADS); results keep list order.
    void run_all(const std::vector<Check>& checks);

    bool all_pass() const;
    uint64_t seed() const { return seed_; }
    nlohmann::json to_json() const;

    /// Prints one line per check plus a summary; writes the JSON report to
    /// `json_path` when nonempty. Returns the process exit code (0/1).
    int emit(const std::string& json_path) const;

private:
    std::string command_;
    nlohmann::json parameters_;
    uint64_t seed_;
    std::vector<CheckResult> results_;
    double duration_ms_ = 0.0;
};

} // namespace cctool
