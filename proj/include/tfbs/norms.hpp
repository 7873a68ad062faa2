#pragma once

#include <cstddef>
#include <span>

namespace tfbs {

/// Discrete error norms of a nodal difference:
///   l_inf over all knots j = 0..M,
///   l2 = sqrt(h * sum_{j=1..M-1} diff_j^2)  (interior-weighted).
struct ErrorReport {
    double l_inf = 0.0;
    double l2 = 0.0;
    std::size_t points = 0;  // number of knots compared
    double h = 0.0;
    double runtime_seconds = 0.0;  // filled by the caller when timed
};

/// Norms of (numeric - exact). Throws std::invalid_argument on length
/// mismatch or fewer than 3 points.
ErrorReport error_norms(std::span<const double> numeric,
                        std::span<const double> exact, double h);

}  // namespace tfbs
