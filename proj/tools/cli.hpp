#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tomolight::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

enum ExitCode { kOk = 0, kIoError = 1, kBadConfig = 2, kNumericFailure = 3 };

struct RunConfig {
    std::string command;

    int l = 1;
    int h = 0;
    double nbar = 20.0;
    double delta = 0.78539816339744831;

    double chi = 1.0;
    double t = 0.0;  ///< t / T_rev
    int k = 0;       ///< fractional-revival order for wigner, 0 = initial state
    double t_end = 1.0;
    int samples = 400;

    std::string model;  ///< "", "amp" or "phase"
    double scaled_time = 0.0;

    int n_theta = 201;
    double x_max = 12.0;
    int n_x = 1201;
    double extent = 12.0;
    int n_phase = 481;

    double theta1 = 0.0;
    double theta2 = 0.0;
    double x2 = 0.0;

    int max_order = 4;
    double zeta = 2.0 / 3.0;

    int cutoff = 0;  ///< 0 = automatic
    double epsilon = 1e-12;
    std::string out = "out.csv";
    long long seed = 0;  ///< reserved

    bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Range and consistency checks; throws InvalidArgument.
void validate(const RunConfig& c);

/// Path of the JSON sidecar written next to a CSV output.
std::string sidecar_path(const std::string& csv_path);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace tomolight::cli
