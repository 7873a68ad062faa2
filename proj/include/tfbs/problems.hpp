#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfbs/engine.hpp"

namespace tfbs {

/// Parameters of the logistic travelling-wave solution of the classical
/// Burgers equation: front of height [sigma-mu, sigma+mu] moving at
/// speed sigma with steepness mu/nu.
struct TravelingWaveParams {
    double mu = 0.3;
    double sigma = 0.4;
    double nu = 0.1;
    double lambda = 0.8;
};

/// Exact travelling wave (mu+sigma+(sigma-mu)E)/(1+E) with
/// E = exp[(mu/nu)(x - sigma t - lambda)], evaluated in an
/// overflow-safe form for large positive exponents.
double traveling_wave_exact(const TravelingWaveParams& p, double x, double t);

/// Benchmark 1: travelling-wave problem on [-3,3], boundary data traced
/// from the exact solution, no source. The exact solution solves the
/// classical (gamma = 1) equation only.
ProblemSpec example1_spec(FractionalOrder gamma, double h, double tau,
                          double T);

/// Benchmark 2 (fractional): same initial profile on [-3,3], Dirichlet
/// data given by truncated fractional power series at both ends.
/// Requires gamma in (0, 1).
ProblemSpec example2_spec(FractionalOrder gamma, double h, double tau,
                          double T);

/// Caputo derivative of t^p in closed form:
///   0 for p = 0, else Gamma(p+1)/Gamma(p+1-gamma) * t^{p-gamma}.
double caputo_of_monomial(double p, FractionalOrder gamma, double t);

/// Manufactured problem with exact solution u*(x,t) = (1+t^2) sin(pi x)
/// on [0,1]: the source term carries the closed-form Caputo derivative
/// of the time part, so order measurements see only discretization
/// error. nu = 0.1.
struct MmsProblem {
    ProblemSpec spec;
    std::function<double(double, double)> exact;
};

MmsProblem mms_problem(FractionalOrder gamma, const SpatialGrid& grid,
                       double tau, double T);

/// Named problem lookup for the CLI: "example1", "example2", "mms".
/// `exact` is empty when no quantitative oracle exists for the given
/// gamma (example1 with gamma < 1, example2 always).
struct BenchmarkProblem {
    ProblemSpec spec;
    std::function<double(double, double)> exact;
};

std::vector<std::string> problem_names();

/// Throws std::invalid_argument for unknown names or invalid
/// discretization parameters.
BenchmarkProblem make_problem(const std::string& name, double gamma,
                              double h, double tau, double T,
                              std::optional<double> nu_override = {});

}  // namespace tfbs
