#include <doctest.h>

#include <cmath>
#include <complex>

#include "qei/discretize.hpp"
#include "qei/spectral.hpp"

using namespace qei;

namespace {

KernelSpec spec_for(ScatteringModel model, PolynomialP poly = PolynomialP::one(),
                    double sigma = 0.1) {
    const double mu = model.mass();
    return KernelSpec(std::move(model), std::move(poly),
                      SmearingFunction(sigma, mu), 0, 0);
}

} // namespace

TEST_CASE("basis functions reproduce the reference grids") {
    const DiscretizationGrid a(10.0, 500, 4);
    const BasisFunction b0 = basis_function(a, 0);
    CHECK(b0.support_left == doctest::Approx(-10.0));
    CHECK(b0.support_right == doctest::Approx(-9.96));
    CHECK(b0.amplitude == doctest::Approx(5.0).epsilon(1e-14)); // 1/sqrt(0.04)

    const DiscretizationGrid c(7.0, 500, 4);
    const BasisFunction b499 = basis_function(c, 499);
    CHECK(b499.support_left == doctest::Approx(6.972));
    CHECK(b499.support_right == doctest::Approx(7.0));
    CHECK(b499.amplitude == doctest::Approx(1.0 / std::sqrt(0.028)).epsilon(1e-14));
    // Unit L2 norm: amplitude^2 * h = 1.
    CHECK(b499.amplitude * b499.amplitude * c.cell_width() ==
          doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(basis_function(a, 500), std::out_of_range);
    CHECK_THROWS_AS(basis_function(a, -1), std::out_of_range);
    CHECK_THROWS_AS(DiscretizationGrid(0.0, 10, 4), std::invalid_argument);
    CHECK_THROWS_AS(DiscretizationGrid(1.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(DiscretizationGrid(1.0, 10, 0), std::invalid_argument);
}

TEST_CASE("assembled matrix is exactly symmetric and finite") {
    const KernelMatrix km =
        assemble_matrix(spec_for(ScatteringModel::ising(1.0)),
                        DiscretizationGrid(4.0, 60, 3));
    for (int j = 0; j < 60; ++j)
        for (int k = 0; k < 60; ++k) {
            CHECK(km.entries(j, k) == km.entries(k, j));
            CHECK(std::isfinite(km.entries(j, k)));
        }
}

TEST_CASE("free-model diagonal entries are positive") {
    const KernelMatrix km =
        assemble_matrix(spec_for(ScatteringModel::free_boson(1.0)),
                        DiscretizationGrid(4.0, 40, 4));
    for (int j = 0; j < 40; ++j) CHECK(km.entries(j, j) > 0.0);
}

TEST_CASE("entries far off the energy shell are Gaussian-suppressed") {
    const KernelMatrix km =
        assemble_matrix(spec_for(ScatteringModel::ising(1.0)),
                        DiscretizationGrid(5.0, 50, 4));
    const double scale = km.entries.max_abs();
    // theta ~ -5 vs eta ~ 0: |cosh theta - cosh eta| ~ 73 >> mu/sigma = 10.
    CHECK(std::fabs(km.entries(0, 25)) < 1e-12 * scale);
    CHECK(std::fabs(km.entries(49, 25)) < 1e-12 * scale);
}

TEST_CASE("midpoint fast path tracks the q=4 assembly") {
    const KernelSpec spec = spec_for(ScatteringModel::ising(1.0));
    // Coarse cells (h = 0.2): the midpoint rule is a few percent off.
    const double l1 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(5.0, 50, 1)))
            .lambda_min;
    const double l4 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(5.0, 50, 4)))
            .lambda_min;
    CHECK(std::fabs(l1 - l4) / std::fabs(l4) < 2e-2);
    // At the reference cell width h = 0.028 the two agree to 1e-3.
    const double f1 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(3.5, 250, 1)))
            .lambda_min;
    const double f4 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(3.5, 250, 4)))
            .lambda_min;
    CHECK(std::fabs(f1 - f4) / std::fabs(f4) < 1e-3);
}

TEST_CASE("quadrature order q=4 is converged") {
    const KernelSpec spec = spec_for(ScatteringModel::ising(1.0));
    const double l4 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(5.0, 50, 4)))
            .lambda_min;
    const double l6 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(5.0, 50, 6)))
            .lambda_min;
    CHECK(std::fabs(l4 - l6) / std::fabs(l6) < 1e-6);
}

TEST_CASE("basis vectors reproduce matrix entries through expectation") {
    const KernelSpec spec = spec_for(ScatteringModel::sinh_gordon(1.0, 1.0));
    const DiscretizationGrid grid(3.0, 20, 3);
    const KernelMatrix km = assemble_matrix(spec, grid);
    std::vector<std::complex<double>> ej(20, 0.0), ek(20, 0.0);
    for (auto [j, k] : {std::pair{0, 0}, {3, 7}, {7, 3}, {19, 2}, {10, 10}}) {
        ej.assign(20, 0.0);
        ek.assign(20, 0.0);
        ej[j] = 1.0;
        ek[k] = 1.0;
        // Shared quadrature rule: bit-for-bit equality, both orders.
        CHECK(expectation(spec, grid, ej, ek) == km.entries(j, k));
    }
}

TEST_CASE("assembly is deterministic across thread counts") {
    const KernelSpec spec = spec_for(ScatteringModel::sinh_gordon(1.0, 0.7));
    const DiscretizationGrid grid(3.0, 24, 2);
    const KernelMatrix a = assemble_matrix(spec, grid, 1);
    const KernelMatrix b = assemble_matrix(spec, grid, 4);
    for (int j = 0; j < 24; ++j)
        for (int k = 0; k < 24; ++k) CHECK(a.entries(j, k) == b.entries(j, k));
}

TEST_CASE("enlarging the cutoff at fixed cell width can only lower lambda_min") {
    // h = 0.056 in both; the smaller grid's cells are a subset of the
    // larger's, so the matrices nest and eigenvalue interlacing applies.
    const KernelSpec spec = spec_for(ScatteringModel::ising(1.0));
    const double small =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(3.5, 125, 4)))
            .lambda_min;
    const double large =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(7.0, 250, 4)))
            .lambda_min;
    CHECK(large <= small + 1e-12);
}

TEST_CASE("refining N at fixed R converges") {
    const KernelSpec spec = spec_for(ScatteringModel::ising(1.0));
    const double l125 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(7.0, 125, 4)))
            .lambda_min;
    const double l250 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(7.0, 250, 4)))
            .lambda_min;
    const double l500 =
        lowest_eigenpair(assemble_matrix(spec, DiscretizationGrid(7.0, 500, 4)))
            .lambda_min;
    const double d1 = std::fabs(l250 - l125);
    const double d2 = std::fabs(l500 - l250);
    CHECK(d2 < d1);
}
