#pragma once

#include <optional>
#include <string>

namespace tfbs {

/// One CLI invocation: which problem, which discretization, which mode,
/// and where the CSV artifacts go.
struct RunConfig {
    enum class Mode { solve, converge_space, converge_time, sweep_gamma };

    Mode mode = Mode::solve;
    std::string problem;
    double gamma = 1.0;
    double h = 0.01;
    double tau = 0.01;
    double T = 1.0;
    std::optional<double> nu;
    std::string output_path;
    int levels = 4;  // halving levels for the converge modes
};

/// Executes the configured run and writes its artifacts.
/// Returns 0 on success, 1 on numerical failure, 2 on configuration
/// errors (unknown problem, invalid parameters, missing oracle).
int run(const RunConfig& config);

}  // namespace tfbs
