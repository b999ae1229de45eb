#include "qei/kernel.hpp"

#include <cmath>

namespace qei {

double gtilde_sq(const SmearingFunction& smearing, double omega) {
    const double x = smearing.sigma * omega / smearing.mass_ref;
    return std::exp(-x * x);
}

double f_p(const KernelSpec& spec, double theta) {
    return spec.poly(std::cosh(theta)) * fmin_shifted(spec.model, theta);
}

double free_kernel(double mu, int alpha, int beta, double theta, double eta) {
    if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
        throw std::invalid_argument("free_kernel: component indices must be 0 or 1");
    const double prefactor = mu * mu / (2.0 * M_PI);
    const double s = 0.5 * (theta + eta);
    if (alpha != beta) return prefactor * std::sinh(s) * std::cosh(s);
    const double v = (alpha == 0) ? std::cosh(s) : std::sinh(s);
    return prefactor * v * v;
}

double kernel_value(const KernelSpec& spec, double theta, double eta) {
    const double mu = spec.model.mass();
    const double omega_diff = mu * std::cosh(theta) - mu * std::cosh(eta);
    return free_kernel(mu, spec.alpha, spec.beta, theta, eta) *
           f_p(spec, theta - eta) * gtilde_sq(spec.smearing, omega_diff);
}

} // namespace qei
