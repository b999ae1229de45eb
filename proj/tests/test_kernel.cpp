#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qei/kernel.hpp"
#include "qei/quadrature.hpp"

using namespace qei;

namespace {

KernelSpec make_spec(ScatteringModel model, PolynomialP poly, double sigma,
                     int alpha = 0, int beta = 0) {
    const double mu = model.mass();
    return KernelSpec(std::move(model), std::move(poly),
                      SmearingFunction(sigma, mu), alpha, beta);
}

// Direct Fourier quadrature of g^2: gtilde2(w) = 2 Int_0^T g^2(t) cos(w t) dt.
double oracle_gtilde_sq(double sigma, double mu, double omega) {
    const double norm = mu / (2.0 * sigma * std::sqrt(M_PI));
    auto g2 = [=](double t) {
        const double u = mu * t / (2.0 * sigma);
        return norm * std::exp(-u * u);
    };
    const double cut = 30.0 * sigma / mu;
    return 2.0 * integrate_adaptive(
                     [&](double t) { return g2(t) * std::cos(omega * t); }, 0.0,
                     cut, 1e-13)
                     .value;
}

} // namespace

TEST_CASE("polynomial enforces P(1)=1 and trims degree") {
    CHECK_THROWS_AS(PolynomialP({0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(PolynomialP({}), std::invalid_argument);
    const PolynomialP p({0.25, 0.5, 0.25});
    CHECK(p(1.0) == doctest::Approx(1.0));
    CHECK(p(2.0) == doctest::Approx(0.25 + 1.0 + 1.0));
    CHECK(p.degree() == 2);
    CHECK(PolynomialP({1.0, 0.0}).degree() == 0);
    CHECK(PolynomialP::linear(0.4).degree() == 1);
    CHECK(PolynomialP::linear(0.4).leading_coefficient() == doctest::Approx(0.4));
    CHECK(PolynomialP::one().degree() == 0);
}

TEST_CASE("smearing transform has the closed Gaussian form") {
    const SmearingFunction s(0.1, 1.0);
    CHECK(gtilde_sq(s, 0.0) == 1.0);
    CHECK(gtilde_sq(s, 10.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(gtilde_sq(s, -10.0) == gtilde_sq(s, 10.0)); // even
    for (double w : {0.3, 2.0, 25.0}) CHECK(gtilde_sq(s, w) > 0.0);
    CHECK_THROWS_AS(SmearingFunction(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SmearingFunction(0.1, -1.0), std::invalid_argument);
}

TEST_CASE("smearing transform matches direct Fourier quadrature of g^2") {
    for (double sigma : {0.1, 0.5}) {
        const SmearingFunction s(sigma, 1.0);
        for (double w : {0.0, 1.0, 4.0, 9.0})
            CHECK(std::fabs(gtilde_sq(s, w) - oracle_gtilde_sq(sigma, 1.0, w)) <
                  1e-10);
    }
}

TEST_CASE("f_p combines the polynomial and the minimal solution") {
    const KernelSpec free_spec =
        make_spec(ScatteringModel::free_boson(1.0), PolynomialP::one(), 0.1);
    CHECK(f_p(free_spec, 5.0) == 1.0);

    const KernelSpec ising_one =
        make_spec(ScatteringModel::ising(1.0), PolynomialP::one(), 0.1);
    CHECK(f_p(ising_one, 0.0) == 1.0);

    const KernelSpec ising_x =
        make_spec(ScatteringModel::ising(1.0), PolynomialP({0.0, 1.0}), 0.1);
    CHECK(f_p(ising_x, 2.0) ==
          doctest::Approx(std::cosh(2.0) * std::cosh(1.0)).epsilon(1e-15));
}

TEST_CASE("normalization anchor: F_P(0) = F_min(i pi) = 1 for free and Ising") {
    for (auto model : {ScatteringModel::free_boson(1.0), ScatteringModel::ising(1.0)}) {
        const KernelSpec spec = make_spec(model, PolynomialP({0.7, 0.2, 0.1}), 0.1);
        CHECK(f_p(spec, 0.0) == 1.0);
    }
}

TEST_CASE("free kernel entries") {
    CHECK(free_kernel(1.0, 0, 0, 0.0, 0.0) ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-15));
    for (double t : {0.3, 1.0, 4.0})
        CHECK(free_kernel(1.0, 1, 1, t, -t) == 0.0);
    CHECK(free_kernel(2.0, 0, 1, 1.0, 0.0) ==
          doctest::Approx(4.0 / (2.0 * M_PI) * 0.5 * std::sinh(1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(free_kernel(1.0, 2, 0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("kernel values assemble the dressed free kernel") {
    const KernelSpec free_spec =
        make_spec(ScatteringModel::free_boson(1.0), PolynomialP::one(), 0.1);
    CHECK(kernel_value(free_spec, 0.0, 0.0) ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-15));

    // mu cosh(1) - mu cosh(-1) = 0 kills the Gaussian argument.
    const KernelSpec ising =
        make_spec(ScatteringModel::ising(1.0), PolynomialP::one(), 0.1);
    CHECK(kernel_value(ising, 1.0, -1.0) ==
          doctest::Approx(std::cosh(1.0) / (2.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("kernel is symmetric in (theta,eta) and across tensor indices") {
    const KernelSpec k00 =
        make_spec(ScatteringModel::ising(1.0), PolynomialP::linear(0.2), 0.1);
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double theta = u(rng), eta = u(rng);
        const double a = kernel_value(k00, theta, eta);
        const double b = kernel_value(k00, eta, theta);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
        // Tensor symmetry holds identically.
        const KernelSpec k01 =
            make_spec(ScatteringModel::ising(1.0), PolynomialP::linear(0.2), 0.1, 0, 1);
        const KernelSpec k10 =
            make_spec(ScatteringModel::ising(1.0), PolynomialP::linear(0.2), 0.1, 1, 0);
        CHECK(kernel_value(k01, theta, eta) == kernel_value(k10, theta, eta));
    }
}

TEST_CASE("continuity-equation identity links the two tensor rows") {
    // (cosh th - cosh et) F^{0b} = (sinh th - sinh et) F^{1b}; the prefactors
    // are evaluated in product form to keep both sides well conditioned.
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int i = 0; i < 400; ++i) {
        const double theta = u(rng), eta = u(rng);
        const double s = 0.5 * (theta + eta), d = 0.5 * (theta - eta);
        const double dcosh = 2.0 * std::sinh(s) * std::sinh(d);
        const double dsinh = 2.0 * std::cosh(s) * std::sinh(d);
        for (int beta = 0; beta <= 1; ++beta) {
            const KernelSpec k0 = make_spec(ScatteringModel::ising(1.0),
                                            PolynomialP::linear(0.3), 0.1, 0, beta);
            const KernelSpec k1 = make_spec(ScatteringModel::ising(1.0),
                                            PolynomialP::linear(0.3), 0.1, 1, beta);
            const double lhs = dcosh * kernel_value(k0, theta, eta);
            const double rhs = dsinh * kernel_value(k1, theta, eta);
            CHECK(std::fabs(lhs - rhs) <=
                  1e-12 * std::max({std::fabs(lhs), std::fabs(rhs), 1e-300}));
        }
    }
}

TEST_CASE("expectation: free-field energy of a localized state is positive") {
    const KernelSpec spec =
        make_spec(ScatteringModel::free_boson(1.0), PolynomialP::one(), 0.1);
    const DiscretizationGrid grid(5.0, 100, 4); // h = 0.1
    // Normalized indicator of [-0.1, 0.1]: cells 49 and 50, coefficient
    // 1/sqrt(2) each in the orthonormal step basis.
    std::vector<std::complex<double>> phi(100, 0.0);
    phi[49] = phi[50] = 1.0 / std::sqrt(2.0);
    const double value = expectation(spec, grid, phi);
    CHECK(value > 0.0);
    // Matches the entry combination of the same quadratic form.
    std::vector<std::complex<double>> e49(100, 0.0), e50(100, 0.0);
    e49[49] = 1.0;
    e50[50] = 1.0;
    const double m4949 = expectation(spec, grid, e49, e49);
    const double m4950 = expectation(spec, grid, e49, e50);
    const double m5050 = expectation(spec, grid, e50, e50);
    CHECK(value == doctest::Approx(0.5 * (m4949 + m5050) + m4950).epsilon(1e-13));
}

TEST_CASE("expectation is real for complex wavefunctions (Hermitian kernel)") {
    const KernelSpec spec =
        make_spec(ScatteringModel::ising(1.0), PolynomialP::one(), 0.1);
    const DiscretizationGrid grid(3.0, 24, 2);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::complex<double>> phi(24);
    for (auto& c : phi) c = {u(rng), u(rng)};
    // Manual complex contraction over sesquilinear basis entries.
    std::complex<double> acc = 0.0;
    std::vector<std::complex<double>> ej(24, 0.0), ek(24, 0.0);
    for (int j = 0; j < 24; ++j)
        for (int k = 0; k < 24; ++k) {
            ej.assign(24, 0.0);
            ek.assign(24, 0.0);
            ej[j] = 1.0;
            ek[k] = 1.0;
            acc += std::conj(phi[j]) * phi[k] * expectation(spec, grid, ej, ek);
        }
    CHECK(std::fabs(acc.imag()) <= 1e-10 * std::max(1.0, std::fabs(acc.real())));
    CHECK(expectation(spec, grid, phi) ==
          doctest::Approx(acc.real()).epsilon(1e-12));
}

TEST_CASE("expectation rejects zero-norm and mismatched wavefunctions") {
    const KernelSpec spec =
        make_spec(ScatteringModel::free_boson(1.0), PolynomialP::one(), 0.1);
    const DiscretizationGrid grid(2.0, 10, 2);
    std::vector<std::complex<double>> zero(10, 0.0), ok(10, 1.0), shrt(9, 1.0);
    CHECK_THROWS_AS(expectation(spec, grid, zero), std::invalid_argument);
    CHECK_THROWS_AS(expectation(spec, grid, ok, zero), std::invalid_argument);
    CHECK_THROWS_AS(expectation(spec, grid, shrt, shrt), std::invalid_argument);
}

TEST_CASE("kernel spec validates component indices") {
    CHECK_THROWS_AS(make_spec(ScatteringModel::free_boson(1.0),
                              PolynomialP::one(), 0.1, 0, 2),
                    std::invalid_argument);
}
