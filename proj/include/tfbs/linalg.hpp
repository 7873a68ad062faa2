#pragma once

#include <cstddef>
#include <vector>

namespace tfbs {

/// Tridiagonal system A x = rhs with lower/upper bands of length n-1.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
};

/// Thomas algorithm (forward elimination, back substitution), O(n).
/// No pivoting: the collocation systems are diagonally dominant for
/// practical parameters. Throws std::runtime_error when an elimination
/// pivot falls below 1e-14 times the diagonal scale.
std::vector<double> thomas_solve(const TridiagonalSystem& system);

/// Gaussian elimination with partial pivoting on a dense square matrix
/// (row-major). Test oracle and initial-fit fallback; not a hot path.
/// Throws std::runtime_error on a singular matrix.
std::vector<double> dense_solve(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs);

/// Expands a tridiagonal system to its dense matrix (oracle plumbing).
std::vector<std::vector<double>> expand(const TridiagonalSystem& system);

/// Strict row-wise diagonal dominance check.
bool diagonally_dominant(const TridiagonalSystem& system);

}  // namespace tfbs
