#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tfbs {

/// Fractional time-derivative order, restricted to (0, 1].
/// gamma = 1 is the classical first derivative.
class FractionalOrder {
  public:
    explicit FractionalOrder(double gamma);
    double value() const { return gamma_; }

  private:
    double gamma_;
};

/// L1 weight sequence w_l = (l+1)^{1-gamma} - l^{1-gamma}, grown lazily
/// as the step count increases. w_0 = 1 exactly for every gamma (the
/// closed form takes 0^0 = 0); for gamma = 1 all later weights vanish.
class L1Weights {
  public:
    explicit L1Weights(FractionalOrder gamma);

    /// Guarantees w[0..n] are available.
    void ensure(std::size_t n);

    double operator[](std::size_t l) const { return w_[l]; }
    std::size_t size() const { return w_.size(); }
    FractionalOrder order() const { return gamma_; }

  private:
    FractionalOrder gamma_;
    std::vector<double> w_;
};

/// Convenience factory: weights w[0..n] for the given order.
L1Weights l1_weights(FractionalOrder gamma, std::size_t n);

/// Time-step scale factor alpha0 = tau^gamma * Gamma(2 - gamma).
/// Throws std::domain_error for tau <= 0.
double alpha0(double tau, FractionalOrder gamma);

/// Weighted combination of all stored time levels that forms the L1
/// right-hand side: with n = history.size() - 1,
///
///   sum_{l=1..n} (w[n-l] - w[n-l+1]) * u^l  +  w[n] * u^0
///
/// The coefficients are nonnegative and sum to exactly 1, so constant
/// histories are preserved. Throws std::invalid_argument on empty or
/// ragged history.
std::vector<double> history_combination(
    const std::vector<std::vector<double>>& history, L1Weights& weights);

}  // namespace tfbs
