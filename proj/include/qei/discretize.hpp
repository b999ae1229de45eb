#pragma once

#include "qei/grid.hpp"
#include "qei/kernel.hpp"
#include "qei/matrix.hpp"

namespace qei {

/// M_jk = <phi_j, T^{ab}(g^2) phi_k> over the orthonormal step basis, with
/// the grid and kernel description it was assembled from.
struct KernelMatrix {
    Matrix entries;
    DiscretizationGrid grid;
    KernelSpec spec;
};

/// Assembles the N x N matrix by tensor-product Gauss-Legendre quadrature of
/// order q per cell pair,
///   M_jk = (1/h) Int_{cell_j} Int_{cell_k} F^{ab}(theta,eta) dtheta deta.
/// F_P is precomputed on the difference lattice (j-k)h + node offsets, so the
/// sinh-Gordon quadrature runs O(N q^2) times, not O(N^2 q^2). The upper
/// triangle is computed and mirrored, which makes the result exactly
/// symmetric (equivalent to assembling and then averaging with the
/// transpose). Throws NumericalError naming (j,k) on a non-finite entry.
KernelMatrix assemble_matrix(const KernelSpec& spec,
                             const DiscretizationGrid& grid,
                             unsigned threads = 1);

} // namespace qei
