#include "tfbs/caputo.hpp"

#include <cmath>
#include <stdexcept>

#include "tfbs/kernels.hpp"

namespace tfbs {

FractionalOrder::FractionalOrder(double gamma) : gamma_(gamma) {
    if (!(gamma > 0.0) || !(gamma <= 1.0)) {
        throw std::domain_error("FractionalOrder: gamma must lie in (0, 1]");
    }
}

L1Weights::L1Weights(FractionalOrder gamma) : gamma_(gamma), w_{1.0} {}

void L1Weights::ensure(std::size_t n) {
    const double e = 1.0 - gamma_.value();
    while (w_.size() <= n) {
        const double l = static_cast<double>(w_.size());
        w_.push_back(std::pow(l + 1.0, e) - std::pow(l, e));
    }
}

L1Weights l1_weights(FractionalOrder gamma, std::size_t n) {
    L1Weights w(gamma);
    w.ensure(n);
    return w;
}

double alpha0(double tau, FractionalOrder gamma) {
    if (!(tau > 0.0)) throw std::domain_error("alpha0: tau must be positive");
    return std::pow(tau, gamma.value()) * std::tgamma(2.0 - gamma.value());
}

std::vector<double> history_combination(
    const std::vector<std::vector<double>>& history, L1Weights& weights) {
    if (history.empty()) {
        throw std::invalid_argument("history_combination: empty history");
    }
    const std::size_t n = history.size() - 1;
    const std::size_t m = history.front().size();
    for (const auto& level : history) {
        if (level.size() != m) {
            throw std::invalid_argument(
                "history_combination: history levels differ in length");
        }
    }
    weights.ensure(n + 1);

    std::vector<double> acc(m);
    kernels::scaled_copy(acc.data(), history[0].data(), weights[n], m);
    for (std::size_t l = 1; l <= n; ++l) {
        const double coeff = weights[n - l] - weights[n - l + 1];
        kernels::axpy(acc.data(), history[l].data(), coeff, m);
    }
    return acc;
}

}  // namespace tfbs
