#pragma once

#include "tfbs/grid.hpp"

namespace tfbs {

/// Knot values of the cubic trigonometric B-spline and its first two
/// derivatives on a uniform grid of spacing h:
///
///   value at the two near-neighbour knots  a1, at the centre knot  a2
///   first derivative at the neighbours    -a3 / +a3 (zero at centre)
///   second derivative                      a4, a5, a4
///
/// These turn collocation at the knots into three-term recurrences.
struct StencilConstants {
    double a1;
    double a2;
    double a3;
    double a4;
    double a5;
};

/// Evaluates the five knot constants for spacing h.
///
/// Uses product forms of the trigonometric expressions (e.g. the a4
/// denominator 4cos(h/2) - 4cos(5h/2) is evaluated as 8 sin(3h/2) sin h)
/// so small spacings do not lose precision to cancellation.
/// Throws std::domain_error unless 0 < h < 2*pi/3.
StencilConstants stencil_constants(double h);

/// Cubic trigonometric B-spline with support [x_i, x_{i+4}]; the basis
/// index may run from -3 to M-1 so that every function overlapping
/// [a, b] is available (ghost knots extend the grid analytically).
/// Returns 0 outside the support.
double tb4(long i, double x, const SpatialGrid& grid);

/// First and second derivatives of tb4, differentiated piecewise in
/// closed form.
double tb4_d1(long i, double x, const SpatialGrid& grid);
double tb4_d2(long i, double x, const SpatialGrid& grid);

}  // namespace tfbs
