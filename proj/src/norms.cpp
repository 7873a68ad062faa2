#include "tfbs/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "tfbs/kernels.hpp"

namespace tfbs {

ErrorReport error_norms(std::span<const double> numeric,
                        std::span<const double> exact, double h) {
    if (numeric.size() != exact.size()) {
        throw std::invalid_argument("error_norms: length mismatch");
    }
    if (numeric.size() < 3) {
        throw std::invalid_argument("error_norms: need at least 3 points");
    }
    ErrorReport r;
    r.points = numeric.size();
    r.h = h;
    r.l_inf = kernels::max_abs_diff(numeric.data(), exact.data(),
                                    numeric.size());
    // Interior inner product: endpoints carry the Dirichlet data and are
    // excluded from the weighted sum.
    r.l2 = std::sqrt(h * kernels::sum_sq_diff(numeric.data() + 1,
                                              exact.data() + 1,
                                              numeric.size() - 2));
    return r;
}

}  // namespace tfbs
