#include "tfbs/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tfbs {

namespace {

void check_shape(const TridiagonalSystem& s) {
    const std::size_t n = s.diag.size();
    if (n == 0) throw std::invalid_argument("tridiagonal system is empty");
    if (s.lower.size() != n - 1 || s.upper.size() != n - 1 ||
        s.rhs.size() != n) {
        throw std::invalid_argument("tridiagonal system bands mismatch");
    }
}

}  // namespace

std::vector<double> thomas_solve(const TridiagonalSystem& system) {
    check_shape(system);
    const std::size_t n = system.size();

    double scale = 0.0;
    for (double d : system.diag) scale = std::max(scale, std::fabs(d));
    const double tiny = 1e-14 * std::max(scale, 1e-300);

    std::vector<double> c_prime(n, 0.0);
    std::vector<double> x(n);

    double pivot = system.diag[0];
    if (std::fabs(pivot) < tiny) {
        throw std::runtime_error("thomas_solve: near-singular pivot at row 0");
    }
    c_prime[0] = (n > 1) ? system.upper[0] / pivot : 0.0;
    x[0] = system.rhs[0] / pivot;

    // Forward sweep
    for (std::size_t i = 1; i < n; ++i) {
        pivot = system.diag[i] - system.lower[i - 1] * c_prime[i - 1];
        if (std::fabs(pivot) < tiny) {
            throw std::runtime_error("thomas_solve: near-singular pivot at row " +
                                     std::to_string(i));
        }
        if (i + 1 < n) c_prime[i] = system.upper[i] / pivot;
        x[i] = (system.rhs[i] - system.lower[i - 1] * x[i - 1]) / pivot;
    }

    // Back substitution
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= c_prime[i] * x[i + 1];
    }
    return x;
}

std::vector<double> dense_solve(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs) {
    const std::size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("dense_solve: empty matrix");
    for (const auto& row : matrix) {
        if (row.size() != n) {
            throw std::invalid_argument("dense_solve: matrix not square");
        }
    }
    if (rhs.size() != n) {
        throw std::invalid_argument("dense_solve: rhs length mismatch");
    }

    double scale = 0.0;
    for (const auto& row : matrix) {
        for (double v : row) scale = std::max(scale, std::fabs(v));
    }
    const double tiny = 1e-14 * std::max(scale, 1e-300);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::fabs(matrix[i][k]) > std::fabs(matrix[p][k])) p = i;
        }
        if (std::fabs(matrix[p][k]) < tiny) {
            throw std::runtime_error("dense_solve: singular matrix");
        }
        if (p != k) {
            std::swap(matrix[p], matrix[k]);
            std::swap(rhs[p], rhs[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = matrix[i][k] / matrix[k][k];
            if (m == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) matrix[i][j] -= m * matrix[k][j];
            rhs[i] -= m * rhs[k];
        }
    }

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= matrix[i][j] * x[j];
        x[i] = s / matrix[i][i];
    }
    return x;
}

std::vector<std::vector<double>> expand(const TridiagonalSystem& system) {
    check_shape(system);
    const std::size_t n = system.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = system.diag[i];
        if (i > 0) m[i][i - 1] = system.lower[i - 1];
        if (i + 1 < n) m[i][i + 1] = system.upper[i];
    }
    return m;
}

bool diagonally_dominant(const TridiagonalSystem& system) {
    check_shape(system);
    const std::size_t n = system.size();
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::fabs(system.lower[i - 1]);
        if (i + 1 < n) off += std::fabs(system.upper[i]);
        if (!(std::fabs(system.diag[i]) > off)) return false;
    }
    return true;
}

}  // namespace tfbs
