#include "report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "chaincond/error.hpp"
#include "chaincond/parallel.hpp"

namespace cctool {

void Report::run_all(const std::vector<Check>& checks) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> slots(checks.size());
    chaincond::parallel_for(checks.size(), [&](size_t i) {
        CheckResult r;
        r.name = checks[i].name;
        try {
            r.details = checks[i].run();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.details = nlohmann::json{{"error", e.what()}};
        }
        slots[i] = std::move(r);
    });
    for (CheckResult& r : slots) results_.push_back(std::move(r));
    duration_ms_ += std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
}

bool Report::all_pass() const {
    for (const CheckResult& r : results_)
        if (!r.pass) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json results = nlohmann::json::array();
    for (const CheckResult& r : results_)
        results.push_back({{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    return nlohmann::json{{"command", command_}, {"parameters", parameters_},
                          {"seed", seed_},      {"results", std::move(results)},
                          {"pass", all_pass()}, {"duration_ms", duration_ms_}};
}

int Report::emit(const std::string& json_path) const {
    for (const CheckResult& r : results_) {
        std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
        if (!r.pass && r.details.contains("error"))
            std::cout << "  (" << r.details["error"].get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << (all_pass() ? "ok" : "FAILED") << ": " << results_.size() << " check"
              << (results_.size() == 1 ? "" : "s") << ", seed " << seed_ << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw chaincond::Error(chaincond::ErrorCode::ConfigError,
                                   "cannot write report to " + json_path);
        out << to_json().dump(2) << "\n";
    }
    return all_pass() ? 0 : 1;
}

} // namespace cctool
