#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"

namespace maxmin::cli {

inline constexpr const char* kVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;  // calibrate, mechanism-eval, distribution-moments,
                          // distribution-sample, verify, adversary, simulate,
                          // infodesign-sweep
    std::string verify_which = "all";
    std::string mechanism;  // optional override by name

    double mb = std::numeric_limits<double>::quiet_NaN();
    double ms = std::numeric_limits<double>::quiet_NaN();
    double r = std::numeric_limits<double>::quiet_NaN();
    double r1 = std::numeric_limits<double>::quiet_NaN();
    double r2 = std::numeric_limits<double>::quiet_NaN();
    double iota = std::numeric_limits<double>::quiet_NaN();
    double bid = std::numeric_limits<double>::quiet_NaN();
    double ask = std::numeric_limits<double>::quiet_NaN();

    int grid_n = 101;
    long long sample_n = 100000;
    std::uint64_t seed = 1;
    double tol = 1e-9;

    std::string out_path;  // empty: stdout
    std::string format;    // json | csv | "" (per-command default)
};

struct RunOutput {
    int exit_code = 0;
    std::string body;       // report document
    std::string error_line; // one-line machine-readable reason when exit != 0
};

// Builds the report without touching the filesystem.
RunOutput execute(const RunConfig& config);

// execute() + write the report to config.out_path (or stdout).
int run(const RunConfig& config);

// Full argv entry point (parses flags and the optional key=value config file).
int main_entry(int argc, const char* const* argv);

// JSON serializer with fixed field order and floats at 17 significant digits.
std::string dump_report(const ordered_json& j, int indent = 2);

}  // namespace maxmin::cli
