#pragma once

#include <cstddef>
#include <vector>

namespace tfbs {

/// Uniform partition of [a, b] into M subintervals of width h.
///
/// Spacings must satisfy 0 < h < 2*pi/3: the trigonometric stencil
/// constants contain csc(3h/2) and 1/(1+2 cos h), both of which blow up
/// at h = 2*pi/3. Construct via make_grid(), which enforces this.
struct SpatialGrid {
    double a = 0.0;
    double b = 1.0;
    std::size_t M = 1;
    double h = 1.0;
    std::vector<double> knots;  // x_j = a + j*h, j = 0..M

    /// Knot position for any integer index, including ghost knots
    /// outside [0, M] needed by basis functions overlapping the ends.
    double knot(long j) const { return a + static_cast<double>(j) * h; }
};

/// Builds and validates a uniform grid. Throws std::invalid_argument on
/// a >= b, M = 0, or h outside (0, 2*pi/3).
SpatialGrid make_grid(double a, double b, std::size_t M);

}  // namespace tfbs
