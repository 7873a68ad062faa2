#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tfbs/basis.hpp"
#include "tfbs/caputo.hpp"
#include "tfbs/grid.hpp"
#include "tfbs/linalg.hpp"

namespace tfbs {

/// Full description of one initial/boundary-value problem for the
/// time-fractional Burgers equation
///
///   D_t^gamma u + u u_x - nu u_xx = f,   x in [a,b], t in (0,T],
///
/// with u(x,0) = phi(x) and Dirichlet data psi1/psi2 at the endpoints.
/// `source` may be empty (treated as zero); it exists so manufactured
/// solutions can be verified quantitatively.
struct ProblemSpec {
    SpatialGrid grid;
    double nu = 0.1;
    FractionalOrder gamma{1.0};
    double T = 1.0;
    std::size_t n_steps = 1;
    std::function<double(double)> phi;
    std::function<double(double)> psi1;
    std::function<double(double)> psi2;
    std::function<double(double, double)> source;  // f(x, t), optional

    double tau() const { return T / static_cast<double>(n_steps); }
};

/// Checks invariants (tau > 0, nu > 0, callables present). Corner
/// mismatch |phi(a) - psi1(0)| or |phi(b) - psi2(0)| above 1e-8 is
/// only warned about on stderr; the paper's second benchmark carries
/// rounded boundary data that triggers it legitimately.
void validate(const ProblemSpec& spec);

/// One interior collocation row: L c_{j-1} + Mc c_j + Nr c_{j+1} = rhs.
struct StepRow {
    double L;
    double Mc;
    double Nr;
    double rhs;
};

/// Contributions of the linearized advection term at one node to the
/// three row entries, before scaling by alpha0:
///   (1/3)(u_x)^n  times the value stencil (a1, a2, a1)
/// + (2/3) u^n     times the derivative stencil (-a3, 0, a3).
/// Applied to coefficients that reproduce the frozen state, the row
/// action collapses to u^n (u_x)^n exactly.
struct AdvectionRow {
    double lower;
    double center;
    double upper;
};

AdvectionRow linearized_advection_row(double u_n, double ux_n,
                                      const StencilConstants& st);

/// Spline coefficients c_{-1}..c_{M+1} interpolating phi at every knot,
/// closed with first-derivative end conditions built from one-sided
/// second-order differences of phi. Interpolation at knots is exact by
/// construction.
std::vector<double> fit_initial_coefficients(const ProblemSpec& spec,
                                             const StencilConstants& st);

/// Three-term stencil applications mapping the M+3 coefficients to the
/// M+1 nodal values / first / second derivatives.
std::vector<double> nodal_values(std::span<const double> coeffs,
                                 const StencilConstants& st);
std::vector<double> nodal_d1(std::span<const double> coeffs,
                             const StencilConstants& st);
std::vector<double> nodal_d2(std::span<const double> coeffs,
                             const StencilConstants& st);

/// Marching state: coefficients of the current level plus the complete
/// nodal history the L1 scheme needs. One instance is driven from one
/// thread of control at a time; independent instances are unrelated.
struct SolverState {
    std::size_t level = 0;
    std::vector<double> coeffs;                      // c_{-1}..c_{M+1}
    std::vector<std::vector<double>> nodal_history;  // u^0..u^level
    StencilConstants stencil;
    L1Weights weights;
};

/// Fits the initial coefficients and seeds the history with u^0.
SolverState init_state(const ProblemSpec& spec);

/// Assembles the (M+1)x(M+1) tridiagonal system for level n+1: the
/// discretized equation is collocated at every knot and c_{-1}, c_{M+1}
/// are eliminated with the two Dirichlet boundary equations.
TridiagonalSystem assemble_step(SolverState& state, const ProblemSpec& spec);

/// Advances one time level: solves the assembled system, recovers the
/// ghost coefficients from the boundary equations, appends the new
/// nodal values. Errors are rethrown with the failing level attached.
void advance(SolverState& state, const ProblemSpec& spec);

struct SolveResult {
    std::vector<std::vector<double>> levels;  // u^0..u^N
    double seconds = 0.0;
};

/// Runs the full march to T and returns every level plus wall time.
SolveResult solve(const ProblemSpec& spec);

}  // namespace tfbs
