#include "tfbs/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfbs {

namespace {

std::size_t steps_from(double span, double step, const char* what) {
    if (!(step > 0.0) || !(span > 0.0)) {
        throw std::invalid_argument(std::string(what) +
                                    ": step sizes must be positive");
    }
    const double ratio = span / step;
    const auto n = static_cast<long long>(std::llround(ratio));
    if (n < 1 || std::fabs(ratio - static_cast<double>(n)) > 1e-6) {
        throw std::invalid_argument(std::string(what) +
                                    ": step must divide the span evenly");
    }
    return static_cast<std::size_t>(n);
}

ProblemSpec mms_spec(FractionalOrder gamma, const SpatialGrid& grid,
                     double tau, double T, double nu) {
    constexpr double pi = std::numbers::pi;
    auto u_star = [](double x, double t) {
        return (1.0 + t * t) * std::sin(pi * x);
    };
    ProblemSpec spec;
    spec.grid = grid;
    spec.nu = nu;
    spec.gamma = gamma;
    spec.T = T;
    spec.n_steps = steps_from(T, tau, "mms_problem");
    spec.phi = [u_star](double x) { return u_star(x, 0.0); };
    spec.psi1 = [u_star, a = grid.a](double t) { return u_star(a, t); };
    spec.psi2 = [u_star, b = grid.b](double t) { return u_star(b, t); };
    spec.source = [gamma, nu, u_star](double x, double t) {
        const double s = std::sin(pi * x);
        const double amp = 1.0 + t * t;
        const double u = amp * s;
        const double u_x = amp * pi * std::cos(pi * x);
        const double u_xx = -amp * pi * pi * s;
        // Caputo part of (1 + t^2): the constant term drops out.
        const double cap = caputo_of_monomial(2.0, gamma, t) * s;
        return cap + u * u_x - nu * u_xx;
    };
    return spec;
}

}  // namespace

double traveling_wave_exact(const TravelingWaveParams& p, double x, double t) {
    const double z = (p.mu / p.nu) * (x - p.sigma * t - p.lambda);
    if (z > 0.0) {
        // Equivalent form scaled by exp(-z); safe for large exponents.
        const double e = std::exp(-z);
        return ((p.mu + p.sigma) * e + (p.sigma - p.mu)) / (e + 1.0);
    }
    const double e = std::exp(z);
    return (p.mu + p.sigma + (p.sigma - p.mu) * e) / (1.0 + e);
}

ProblemSpec example1_spec(FractionalOrder gamma, double h, double tau,
                          double T) {
    const TravelingWaveParams p{};
    ProblemSpec spec;
    spec.grid = make_grid(-3.0, 3.0, steps_from(6.0, h, "example1_spec"));
    spec.nu = p.nu;
    spec.gamma = gamma;
    spec.T = T;
    spec.n_steps = steps_from(T, tau, "example1_spec");
    spec.phi = [p](double x) { return traveling_wave_exact(p, x, 0.0); };
    spec.psi1 = [p](double t) { return traveling_wave_exact(p, -3.0, t); };
    spec.psi2 = [p](double t) { return traveling_wave_exact(p, 3.0, t); };
    return spec;
}

ProblemSpec example2_spec(FractionalOrder gamma, double h, double tau,
                          double T) {
    if (gamma.value() >= 1.0) {
        throw std::domain_error("example2_spec: requires gamma in (0, 1)");
    }
    const double g = gamma.value();
    const TravelingWaveParams p{};
    ProblemSpec spec;
    spec.grid = make_grid(-3.0, 3.0, steps_from(6.0, h, "example2_spec"));
    spec.nu = p.nu;
    spec.gamma = gamma;
    spec.T = T;
    spec.n_steps = steps_from(T, tau, "example2_spec");
    spec.phi = [p](double x) { return traveling_wave_exact(p, x, 0.0); };
    // Truncated fractional power series prescribed at the two ends.
    spec.psi1 = [g](double t) {
        return 0.699993 +
               1.07e-5 * std::pow(t, g) / std::tgamma(1.0 + g) -
               9.67e-6 * std::pow(t, 2.0 * g) / std::tgamma(1.0 + 2.0 * g) +
               1.16e-5 * std::pow(t, 3.0 * g) / std::tgamma(1.0 + 3.0 * g);
    };
    spec.psi2 = [g](double t) {
        return 0.100815 +
               1.3e-3 * std::pow(t, g) / std::tgamma(1.0 + g) +
               1.17e-3 * std::pow(t, 2.0 * g) / std::tgamma(1.0 + 2.0 * g) -
               5.72e-6 * std::pow(t, 3.0 * g) / std::tgamma(1.0 + 3.0 * g);
    };
    return spec;
}

double caputo_of_monomial(double p, FractionalOrder gamma, double t) {
    if (p < 0.0) {
        throw std::domain_error("caputo_of_monomial: requires p >= 0");
    }
    if (p == 0.0) return 0.0;  // derivative of a constant
    const double g = gamma.value();
    return std::tgamma(p + 1.0) / std::tgamma(p + 1.0 - g) *
           std::pow(t, p - g);
}

MmsProblem mms_problem(FractionalOrder gamma, const SpatialGrid& grid,
                       double tau, double T) {
    constexpr double pi = std::numbers::pi;
    MmsProblem prob;
    prob.spec = mms_spec(gamma, grid, tau, T, 0.1);
    prob.exact = [](double x, double t) {
        return (1.0 + t * t) * std::sin(pi * x);
    };
    return prob;
}

std::vector<std::string> problem_names() {
    return {"example1", "example2", "mms"};
}

BenchmarkProblem make_problem(const std::string& name, double gamma,
                              double h, double tau, double T,
                              std::optional<double> nu_override) {
    FractionalOrder order(gamma);
    BenchmarkProblem prob;
    if (name == "example1") {
        prob.spec = example1_spec(order, h, tau, T);
        if (nu_override) prob.spec.nu = *nu_override;
        if (gamma == 1.0) {
            TravelingWaveParams p{};
            p.nu = prob.spec.nu;
            prob.exact = [p](double x, double t) {
                return traveling_wave_exact(p, x, t);
            };
            // Keep the boundary trace consistent with the override.
            prob.spec.psi1 = [p](double t) {
                return traveling_wave_exact(p, -3.0, t);
            };
            prob.spec.psi2 = [p](double t) {
                return traveling_wave_exact(p, 3.0, t);
            };
            prob.spec.phi = [p](double x) {
                return traveling_wave_exact(p, x, 0.0);
            };
        }
    } else if (name == "example2") {
        prob.spec = example2_spec(order, h, tau, T);
        if (nu_override) prob.spec.nu = *nu_override;
    } else if (name == "mms") {
        const auto M = steps_from(1.0, h, "mms");
        const SpatialGrid grid = make_grid(0.0, 1.0, M);
        MmsProblem mms = mms_problem(order, grid, tau, T);
        if (nu_override) {
            mms.spec = mms_spec(order, grid, tau, T, *nu_override);
        }
        prob.spec = std::move(mms.spec);
        prob.exact = std::move(mms.exact);
    } else {
        throw std::invalid_argument("unknown problem '" + name +
                                    "' (expected example1, example2 or mms)");
    }
    return prob;
}

}  // namespace tfbs
