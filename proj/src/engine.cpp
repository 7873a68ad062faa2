#include "tfbs/engine.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "tfbs/kernels.hpp"

namespace tfbs {

void validate(const ProblemSpec& spec) {
    if (spec.grid.M < 2) {
        throw std::invalid_argument("ProblemSpec: grid needs M >= 2");
    }
    if (!(spec.nu > 0.0)) {
        throw std::invalid_argument("ProblemSpec: nu must be positive");
    }
    if (!(spec.T > 0.0)) {
        throw std::invalid_argument("ProblemSpec: T must be positive");
    }
    if (!spec.phi || !spec.psi1 || !spec.psi2) {
        throw std::invalid_argument("ProblemSpec: phi/psi1/psi2 must be set");
    }
    const double left = std::fabs(spec.phi(spec.grid.a) - spec.psi1(0.0));
    const double right = std::fabs(spec.phi(spec.grid.b) - spec.psi2(0.0));
    if (left > 1e-8 || right > 1e-8) {
        // single write: solver instances may validate concurrently
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "warning: initial/boundary corner mismatch "
                      "(%.3g, %.3g)\n",
                      left, right);
        std::cerr << buf;
    }
}

AdvectionRow linearized_advection_row(double u_n, double ux_n,
                                      const StencilConstants& st) {
    const double third_ux = ux_n / 3.0;
    const double two_thirds_u = 2.0 * u_n / 3.0;
    return {third_ux * st.a1 - two_thirds_u * st.a3,
            third_ux * st.a2,
            third_ux * st.a1 + two_thirds_u * st.a3};
}

std::vector<double> fit_initial_coefficients(const ProblemSpec& spec,
                                             const StencilConstants& st) {
    const std::size_t M = spec.grid.M;
    const double h = spec.grid.h;

    std::vector<double> f(M + 1);
    for (std::size_t j = 0; j <= M; ++j) f[j] = spec.phi(spec.grid.knots[j]);

    // One-sided second-order end slopes for the derivative closures.
    const double d0 = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    const double dM = (3.0 * f[M] - 4.0 * f[M - 1] + f[M - 2]) / (2.0 * h);

    // Interpolation rows a1 c_{j-1} + a2 c_j + a1 c_{j+1} = phi(x_j),
    // with the ghost coefficients eliminated through
    //   c_{-1}  = c_1     - phi'(x_0)/a3
    //   c_{M+1} = c_{M-1} + phi'(x_M)/a3
    TridiagonalSystem sys;
    sys.lower.assign(M, st.a1);
    sys.diag.assign(M + 1, st.a2);
    sys.upper.assign(M, st.a1);
    sys.rhs = f;
    sys.upper[0] = 2.0 * st.a1;
    sys.rhs[0] = f[0] + st.a1 * d0 / st.a3;
    sys.lower[M - 1] = 2.0 * st.a1;
    sys.rhs[M] = f[M] - st.a1 * dM / st.a3;

    std::vector<double> inner;
    try {
        inner = thomas_solve(sys);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("initial fit failed: ") +
                                 e.what());
    }

    std::vector<double> coeffs(M + 3);
    coeffs[0] = inner[1] - d0 / st.a3;
    for (std::size_t j = 0; j <= M; ++j) coeffs[j + 1] = inner[j];
    coeffs[M + 2] = inner[M - 1] + dM / st.a3;
    return coeffs;
}

namespace {

std::vector<double> apply_stencil(std::span<const double> coeffs,
                                  double w0, double w1, double w2) {
    if (coeffs.size() < 3) {
        throw std::invalid_argument("nodal stencil: coefficient span too short");
    }
    std::vector<double> out(coeffs.size() - 2);
    kernels::stencil3(out.data(), coeffs.data(), w0, w1, w2, out.size());
    return out;
}

}  // namespace

std::vector<double> nodal_values(std::span<const double> coeffs,
                                 const StencilConstants& st) {
    return apply_stencil(coeffs, st.a1, st.a2, st.a1);
}

std::vector<double> nodal_d1(std::span<const double> coeffs,
                             const StencilConstants& st) {
    return apply_stencil(coeffs, -st.a3, 0.0, st.a3);
}

std::vector<double> nodal_d2(std::span<const double> coeffs,
                             const StencilConstants& st) {
    return apply_stencil(coeffs, st.a4, st.a5, st.a4);
}

SolverState init_state(const ProblemSpec& spec) {
    validate(spec);
    SolverState state{0,
                      {},
                      {},
                      stencil_constants(spec.grid.h),
                      L1Weights(spec.gamma)};
    state.coeffs = fit_initial_coefficients(spec, state.stencil);
    state.nodal_history.push_back(nodal_values(state.coeffs, state.stencil));
    return state;
}

TridiagonalSystem assemble_step(SolverState& state, const ProblemSpec& spec) {
    const std::size_t M = spec.grid.M;
    const StencilConstants& st = state.stencil;
    const double tau = spec.tau();
    const double a0 = alpha0(tau, spec.gamma);
    const double t_next = tau * static_cast<double>(state.level + 1);

    const std::vector<double>& u = state.nodal_history.back();
    const std::vector<double> ux = nodal_d1(state.coeffs, st);
    std::vector<double> rhs = history_combination(state.nodal_history,
                                                  state.weights);
    if (spec.source) {
        for (std::size_t j = 0; j <= M; ++j) {
            rhs[j] += a0 * spec.source(spec.grid.knots[j], t_next);
        }
    }

    const double diffusion_off = spec.nu * a0 * st.a4;
    const double diffusion_diag = spec.nu * a0 * st.a5;

    TridiagonalSystem sys;
    sys.lower.resize(M);
    sys.diag.resize(M + 1);
    sys.upper.resize(M);
    sys.rhs.resize(M + 1);

    std::vector<StepRow> rows(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        const AdvectionRow adv = linearized_advection_row(u[j], ux[j], st);
        StepRow& r = rows[j];
        r.L = st.a1 + a0 * adv.lower - diffusion_off;
        r.Mc = st.a2 + a0 * adv.center - diffusion_diag;
        r.Nr = st.a1 + a0 * adv.upper - diffusion_off;
        r.rhs = rhs[j];
        assert(std::isfinite(r.L) && std::isfinite(r.Mc) &&
               std::isfinite(r.Nr) && std::isfinite(r.rhs));
    }

    // Eliminate the ghost coefficients with the Dirichlet equations
    //   a1 c_{-1}  + a2 c_0 + a1 c_1     = psi1(t)
    //   a1 c_{M-1} + a2 c_M + a1 c_{M+1} = psi2(t)
    const double psi_l = spec.psi1(t_next);
    const double psi_r = spec.psi2(t_next);

    sys.diag[0] = rows[0].Mc - rows[0].L * st.a2 / st.a1;
    sys.upper[0] = rows[0].Nr - rows[0].L;
    sys.rhs[0] = rows[0].rhs - rows[0].L * psi_l / st.a1;
    for (std::size_t j = 1; j < M; ++j) {
        sys.lower[j - 1] = rows[j].L;
        sys.diag[j] = rows[j].Mc;
        sys.upper[j] = rows[j].Nr;
        sys.rhs[j] = rows[j].rhs;
    }
    sys.lower[M - 1] = rows[M].L - rows[M].Nr;
    sys.diag[M] = rows[M].Mc - rows[M].Nr * st.a2 / st.a1;
    sys.rhs[M] = rows[M].rhs - rows[M].Nr * psi_r / st.a1;
    return sys;
}

void advance(SolverState& state, const ProblemSpec& spec) {
    if (state.level >= spec.n_steps) {
        throw std::logic_error("advance: already at the final level");
    }
    const std::size_t M = spec.grid.M;
    const StencilConstants& st = state.stencil;
    const double t_next = spec.tau() * static_cast<double>(state.level + 1);

    std::vector<double> inner;
    try {
        TridiagonalSystem sys = assemble_step(state, spec);
        inner = thomas_solve(sys);
    } catch (const std::exception& e) {
        throw std::runtime_error("advance: step to level " +
                                 std::to_string(state.level + 1) +
                                 " failed: " + e.what());
    }

    state.coeffs[0] =
        (spec.psi1(t_next) - st.a2 * inner[0] - st.a1 * inner[1]) / st.a1;
    for (std::size_t j = 0; j <= M; ++j) state.coeffs[j + 1] = inner[j];
    state.coeffs[M + 2] =
        (spec.psi2(t_next) - st.a1 * inner[M - 1] - st.a2 * inner[M]) / st.a1;

    state.nodal_history.push_back(nodal_values(state.coeffs, st));
    ++state.level;
}

SolveResult solve(const ProblemSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    SolverState state = init_state(spec);
    for (std::size_t n = 0; n < spec.n_steps; ++n) advance(state, spec);
    const auto stop = std::chrono::steady_clock::now();

    SolveResult result;
    result.levels = std::move(state.nodal_history);
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

}  // namespace tfbs
