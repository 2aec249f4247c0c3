#pragma once

// Verification report shared by the library checks and the command line.

#include "json.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace tokuyama::cli {

struct Report {
    std::string claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string lhs;
    std::string rhs;
    std::vector<nlohmann::ordered_json> mismatches;
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();
    double runtime_ms = 0.0;
    /// Set when a budget or precondition stops the check before completion.
    std::string error;

    bool pass() const { return error.empty() && mismatches.empty(); }
    std::string verdict() const { return !error.empty() ? "error" : (mismatches.empty() ? "pass" : "fail"); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["claim"] = claim;
        j["params"] = params;
        j["verdict"] = verdict();
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["mismatches"] = mismatches;
        j["notes"] = notes;
        j["runtime_ms"] = runtime_ms;
        if (!error.empty()) j["error"] = error;
        return j;
    }
};

/// Measures wall time into a report when it goes out of scope.
class Stopwatch {
public:
    explicit Stopwatch(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        auto end = std::chrono::steady_clock::now();
        report_.runtime_ms = std::chrono::duration<double, std::milli>(end - start_).count();
    }
    Stopwatch(const Stopwatch&) = delete;
    Stopwatch& operator=(const Stopwatch&) = delete;

private:
    Report& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace tokuyama::cli
