#pragma once

#include <complex>
#include <vector>

#include "qei/grid.hpp"
#include "qei/models.hpp"
#include "qei/polynomial.hpp"

namespace qei {

/// Gaussian time-smearing g(t) = pi^{-1/4} sqrt(mu/(2 sigma)) exp(-(mu t)^2/(8 sigma^2)),
/// normalized so that the integral of g^2 over the line is 1.
struct SmearingFunction {
    double sigma;
    double mass_ref;

    SmearingFunction(double sigma_, double mass_ref_)
        : sigma(sigma_), mass_ref(mass_ref_) {
        if (!(sigma > 0.0)) throw std::invalid_argument("smearing sigma must be > 0");
        if (!(mass_ref > 0.0)) throw std::invalid_argument("smearing mass must be > 0");
    }
};

/// Fourier transform of g^2 at energy difference omega, convention
/// gtilde2(omega) = Int g^2(t) exp(i omega t) dt. For the Gaussian above this
/// is exp(-sigma^2 omega^2 / mu^2): real, even, positive, gtilde2(0) = 1.
double gtilde_sq(const SmearingFunction& smearing, double omega);

/// Full description of one kernel component F^{alpha beta}.
struct KernelSpec {
    ScatteringModel model;
    PolynomialP poly;
    SmearingFunction smearing;
    int alpha = 0;
    int beta = 0;

    KernelSpec(ScatteringModel m, PolynomialP p, SmearingFunction s,
               int alpha_ = 0, int beta_ = 0)
        : model(std::move(m)), poly(std::move(p)), smearing(std::move(s)),
          alpha(alpha_), beta(beta_) {
        if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
            throw std::invalid_argument("kernel component indices must be 0 or 1");
    }
};

/// F_P(theta) = P(cosh theta) * F_min(theta + i pi).
double f_p(const KernelSpec& spec, double theta);

/// Entry (alpha,beta) of the free stress-energy kernel
///   (mu^2 / 2pi) [[cosh^2((theta+eta)/2), sinh(theta+eta)/2],
///                 [sinh(theta+eta)/2,     sinh^2((theta+eta)/2)]].
double free_kernel(double mu, int alpha, int beta, double theta, double eta);

/// F^{alpha beta}(theta,eta) =
///   free_kernel * F_P(theta-eta) * gtilde2(mu cosh theta - mu cosh eta).
double kernel_value(const KernelSpec& spec, double theta, double eta);

/// Sesquilinear form <bra, T^{alpha beta}(g^2) ket> for wavefunctions sampled
/// at the cell midpoints of `grid` (piecewise constant on cells). Uses the
/// same per-cell quadrature rule as matrix assembly, so basis vectors
/// reproduce matrix entries exactly. Returns the real part; the imaginary
/// part vanishes by symmetry of the kernel.
double expectation(const KernelSpec& spec, const DiscretizationGrid& grid,
                   const std::vector<std::complex<double>>& bra,
                   const std::vector<std::complex<double>>& ket);

/// Quadratic form <phi, T^{alpha beta}(g^2) phi>.
double expectation(const KernelSpec& spec, const DiscretizationGrid& grid,
                   const std::vector<std::complex<double>>& phi);

} // namespace qei
