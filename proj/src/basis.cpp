#include "tfbs/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfbs/grid.hpp"

namespace tfbs {

namespace {

// Value and first two derivatives carried through arithmetic (a 2-jet).
// Each basis piece is a short sum of products of half-angle sines, so
// propagating jets through the product rule gives the exact piecewise
// derivatives without hand-expanded formulas.
struct Jet {
    double v;
    double d;
    double dd;
};

Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d,
            a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}

Jet operator+(const Jet& a, const Jet& b) {
    return {a.v + b.v, a.d + b.d, a.dd + b.dd};
}

// p(z) = sin((x - z)/2) and q(z) = sin((z - x)/2) as jets in x.
Jet p_jet(double x, double z) {
    const double s = std::sin(0.5 * (x - z));
    const double c = std::cos(0.5 * (x - z));
    return {s, 0.5 * c, -0.25 * s};
}

Jet q_jet(double x, double z) {
    const double s = std::sin(0.5 * (z - x));
    const double c = std::cos(0.5 * (z - x));
    return {s, -0.5 * c, -0.25 * s};
}

// Piecewise definition over [t0, t4] with t_k = x_i + k h.
Jet tb4_jet(long i, double x, const SpatialGrid& grid) {
    const double t0 = grid.knot(i);
    const double t4 = grid.knot(i + 4);
    if (x < t0 || x > t4) return {0.0, 0.0, 0.0};

    const double h = grid.h;
    const double w =
        std::sin(0.5 * h) * std::sin(h) * std::sin(1.5 * h);
    const Jet inv_w{1.0 / w, 0.0, 0.0};

    int piece = static_cast<int>(std::floor((x - t0) / h));
    if (piece < 0) piece = 0;
    if (piece > 3) piece = 3;

    const double t1 = grid.knot(i + 1);
    const double t2 = grid.knot(i + 2);
    const double t3 = grid.knot(i + 3);

    const Jet p0 = p_jet(x, t0);
    const Jet p1 = p_jet(x, t1);
    const Jet p2 = p_jet(x, t2);
    const Jet q2 = q_jet(x, t2);
    const Jet q3 = q_jet(x, t3);
    const Jet q4 = q_jet(x, t4);

    switch (piece) {
        case 0:
            return inv_w * (p0 * p0 * p0);
        case 1:
            return inv_w * (p0 * (p0 * q2 + q3 * p1) + q4 * (p1 * p1));
        case 2:
            return inv_w * (q4 * (p1 * q3 + q4 * p2) + p0 * (q3 * q3));
        default:
            return inv_w * (q4 * q4 * q4);
    }
}

}  // namespace

StencilConstants stencil_constants(double h) {
    constexpr double upper = 2.0 * std::numbers::pi / 3.0;
    if (!(h > 0.0) || !(h < upper)) {
        throw std::domain_error(
            "stencil_constants: spacing must satisfy 0 < h < 2*pi/3");
    }
    const double sh = std::sin(h);
    const double s32 = std::sin(1.5 * h);
    const double s12 = std::sin(0.5 * h);
    const double c12 = std::cos(0.5 * h);
    const double ch = std::cos(h);

    StencilConstants st;
    st.a1 = s12 * s12 / (sh * s32);
    st.a2 = 2.0 / (1.0 + 2.0 * ch);
    st.a3 = 3.0 / (4.0 * s32);
    // Same value as (3 + 9 cos h) / (4 cos(h/2) - 4 cos(5h/2)); the
    // product denominator stays accurate for tiny h.
    st.a4 = 3.0 * (1.0 + 3.0 * ch) / (8.0 * s32 * sh);
    st.a5 = -3.0 * c12 * c12 / (s12 * s12 * (2.0 + 4.0 * ch));
    return st;
}

double tb4(long i, double x, const SpatialGrid& grid) {
    return tb4_jet(i, x, grid).v;
}

double tb4_d1(long i, double x, const SpatialGrid& grid) {
    return tb4_jet(i, x, grid).d;
}

double tb4_d2(long i, double x, const SpatialGrid& grid) {
    return tb4_jet(i, x, grid).dd;
}

SpatialGrid make_grid(double a, double b, std::size_t M) {
    if (!(a < b)) throw std::invalid_argument("make_grid: requires a < b");
    if (M == 0) throw std::invalid_argument("make_grid: requires M >= 1");
    SpatialGrid g;
    g.a = a;
    g.b = b;
    g.M = M;
    g.h = (b - a) / static_cast<double>(M);
    constexpr double upper = 2.0 * std::numbers::pi / 3.0;
    if (!(g.h > 0.0) || !(g.h < upper)) {
        throw std::invalid_argument(
            "make_grid: spacing must satisfy 0 < h < 2*pi/3");
    }
    g.knots.resize(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        g.knots[j] = a + static_cast<double>(j) * g.h;
    }
    return g;
}

}  // namespace tfbs
