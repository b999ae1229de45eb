#pragma once

#include <cmath>
#include <stdexcept>

namespace qei {

/// Uniform rapidity grid: [-R,R] divided into N cells, with a q-point
/// Gauss-Legendre rule per cell and axis for matrix assembly.
struct DiscretizationGrid {
    double cutoff;        // R
    int cells;            // N
    int quadrature_order; // q, points per cell per axis

    DiscretizationGrid(double R, int N, int q)
        : cutoff(R), cells(N), quadrature_order(q) {
        if (!(R > 0.0) || !std::isfinite(R))
            throw std::invalid_argument("grid cutoff R must be > 0");
        if (N < 1) throw std::invalid_argument("grid cell count N must be >= 1");
        if (q < 1) throw std::invalid_argument("grid quadrature order q must be >= 1");
    }

    double cell_width() const { return 2.0 * cutoff / cells; }
    double cell_left(int j) const { return -cutoff + j * cell_width(); }
    double cell_midpoint(int j) const { return -cutoff + (j + 0.5) * cell_width(); }
};

/// Orthonormal step function phi_j: amplitude h^{-1/2} on cell j, zero
/// elsewhere.
struct BasisFunction {
    double support_left;
    double support_right;
    double amplitude;
};

inline BasisFunction basis_function(const DiscretizationGrid& grid, int j) {
    if (j < 0 || j >= grid.cells)
        throw std::out_of_range("basis_function: cell index out of range");
    const double h = grid.cell_width();
    return BasisFunction{grid.cell_left(j), grid.cell_left(j) + h,
                         1.0 / std::sqrt(h)};
}

} // namespace qei
