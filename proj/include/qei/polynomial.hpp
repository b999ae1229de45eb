#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qei {

/// Real polynomial P(x) = sum c_k x^k constrained to P(1) = 1, the residual
/// normalization freedom of the energy-density kernel.
class PolynomialP {
public:
    explicit PolynomialP(std::vector<double> coefficients)
        : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw std::invalid_argument("polynomial needs at least one coefficient");
        const double at_one =
            std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0);
        if (std::fabs(at_one - 1.0) > 1e-12)
            throw std::invalid_argument(
                "polynomial violates P(1)=1 (got P(1)=" + std::to_string(at_one) + ")");
    }

    static PolynomialP one() { return PolynomialP({1.0}); }

    /// P(x) = (1-alpha) + alpha*x, the degree-one family.
    static PolynomialP linear(double alpha) {
        return PolynomialP({1.0 - alpha, alpha});
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Degree after trimming trailing (near-)zero coefficients.
    int degree() const {
        std::size_t d = coeffs_.size();
        while (d > 1 && coeffs_[d - 1] == 0.0) --d;
        return static_cast<int>(d) - 1;
    }

    /// Coefficient of the trimmed leading term.
    double leading_coefficient() const {
        return coeffs_[static_cast<std::size_t>(degree())];
    }

    const std::vector<double>& coefficients() const { return coeffs_; }

private:
    std::vector<double> coeffs_;
};

} // namespace qei
