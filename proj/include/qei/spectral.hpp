#pragma once

#include <vector>

#include "qei/discretize.hpp"
#include "qei/matrix.hpp"

namespace qei {

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0; // ||M v - value v||_2, certified against the input
};

/// Lowest eigenvalue and unit eigenvector of a symmetric matrix.
/// Householder tridiagonalization, implicit-shift QL for the values, inverse
/// iteration for the vector, Rayleigh-quotient polish. The residual is
/// measured against the original matrix and must satisfy
/// residual <= residual_tol_factor * ||M||_inf, else NumericalError.
/// Sign convention: the component of largest magnitude (lowest index on
/// ties) is positive.
EigenPair lowest_eigenpair(const Matrix& m,
                           double residual_tol_factor = 1e-10);

/// All eigenvalues, ascending.
std::vector<double> full_spectrum(const Matrix& m);

struct EigenSystem {
    std::vector<double> values; // ascending
    Matrix vectors;             // column k pairs with values[k]
};

/// Full orthonormal eigendecomposition (QL with accumulated rotations).
EigenSystem full_eigensystem(const Matrix& m);

/// Spectrum of an assembled kernel matrix, carrying provenance.
struct SpectrumResult {
    double lambda_min;
    std::vector<double> eigenvector; // coefficients in the phi_j basis
    double residual;
    DiscretizationGrid grid;
    KernelSpec spec;
};

SpectrumResult lowest_eigenpair(const KernelMatrix& km,
                                double residual_tol_factor = 1e-10);

} // namespace qei
