#include "qei/discretize.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "qei/parallel.hpp"
#include "qei/quadrature.hpp"

namespace qei {

namespace {

// Precomputed node data shared by matrix assembly and the expectation form.
// Nodes lie on a lattice: theta_{j,a} - eta_{k,b} = (j-k) h + off_a - off_b,
// so F_P is tabulated once per |j-k| and offset pair.
struct AssemblyContext {
    const KernelSpec& spec;
    const DiscretizationGrid& grid;
    int q;
    double h;
    double weight_scale;            // h/4 * mu^2/(2 pi)
    std::vector<double> offsets;    // q node offsets from the cell midpoint
    std::vector<double> gl_weights; // q Gauss-Legendre weights on [-1,1]
    std::vector<double> node_cosh;  // per (cell, node)
    std::vector<double> node_sinh;
    std::vector<double> fp_table;   // [(j-k)][a][b], j-k >= 0

    AssemblyContext(const KernelSpec& s, const DiscretizationGrid& g,
                    unsigned threads)
        : spec(s), grid(g), q(g.quadrature_order), h(g.cell_width()) {
        const double mu = spec.model.mass();
        weight_scale = (h / 4.0) * mu * mu / (2.0 * M_PI);

        const GaussLegendreRule rule = gauss_legendre(q);
        gl_weights = rule.weights;
        offsets.resize(q);
        for (int a = 0; a < q; ++a) offsets[a] = 0.5 * h * rule.nodes[a];

        const int n = grid.cells;
        node_cosh.resize(static_cast<std::size_t>(n) * q);
        node_sinh.resize(static_cast<std::size_t>(n) * q);
        for (int j = 0; j < n; ++j) {
            const double mid = grid.cell_midpoint(j);
            for (int a = 0; a < q; ++a) {
                const double x = mid + offsets[a];
                node_cosh[static_cast<std::size_t>(j) * q + a] = std::cosh(x);
                node_sinh[static_cast<std::size_t>(j) * q + a] = std::sinh(x);
            }
        }

        fp_table.resize(static_cast<std::size_t>(n) * q * q);
        parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t m) {
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    const double diff =
                        static_cast<double>(m) * h + offsets[a] - offsets[b];
                    fp_table[(m * q + a) * q + b] = f_p(spec, diff);
                }
        });
    }

    double fp(int j, int k, int a, int b) const {
        // F_P is even; negative cell offsets map to the mirrored node pair.
        const std::size_t m =
            static_cast<std::size_t>(j >= k ? j - k : k - j);
        return (j >= k) ? fp_table[(m * q + a) * q + b]
                        : fp_table[(m * q + b) * q + a];
    }

    // Quadrature approximation of (1/h) Int Int_{cell_j x cell_k} F^{ab},
    // canonicalized so that (j,k) and (k,j) produce the same double.
    double entry_sym(int j, int k) const {
        return (j <= k) ? entry(j, k) : entry(k, j);
    }

    double entry(int j, int k) const {
        // gtilde2 argument is mu*(cosh theta - cosh eta) in units of mass_ref.
        const double gt_scale =
            spec.smearing.sigma * spec.model.mass() / spec.smearing.mass_ref;
        const int a_idx = spec.alpha, b_idx = spec.beta;
        double acc = 0.0;
        for (int a = 0; a < q; ++a) {
            const double ctheta = node_cosh[static_cast<std::size_t>(j) * q + a];
            const double stheta = node_sinh[static_cast<std::size_t>(j) * q + a];
            for (int b = 0; b < q; ++b) {
                const double ceta = node_cosh[static_cast<std::size_t>(k) * q + b];
                const double seta = node_sinh[static_cast<std::size_t>(k) * q + b];
                const double cosh_sum = ctheta * ceta + stheta * seta; // cosh(theta+eta)
                double freepart;
                if (a_idx != b_idx)
                    freepart = 0.5 * (stheta * ceta + ctheta * seta);
                else if (a_idx == 0)
                    freepart = 0.5 * (1.0 + cosh_sum);
                else
                    freepart = 0.5 * (cosh_sum - 1.0);
                const double x = gt_scale * (ctheta - ceta);
                const double damping = std::exp(-x * x);
                acc += gl_weights[a] * gl_weights[b] * freepart * damping *
                       fp(j, k, a, b);
            }
        }
        return weight_scale * acc;
    }
};

} // namespace

KernelMatrix assemble_matrix(const KernelSpec& spec,
                             const DiscretizationGrid& grid, unsigned threads) {
    const AssemblyContext ctx(spec, grid, threads);
    const int n = grid.cells;
    Matrix m(n);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
        for (int k = static_cast<int>(j); k < n; ++k) {
            const double v = ctx.entry(static_cast<int>(j), k);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "assemble_matrix: non-finite entry at (j,k)=(" << j
                    << "," << k << ")";
                throw NumericalError(msg.str());
            }
            m(static_cast<int>(j), k) = v;
            m(k, static_cast<int>(j)) = v;
        }
    });
    return KernelMatrix{std::move(m), grid, spec};
}

double expectation(const KernelSpec& spec, const DiscretizationGrid& grid,
                   const std::vector<std::complex<double>>& bra,
                   const std::vector<std::complex<double>>& ket) {
    const std::size_t n = static_cast<std::size_t>(grid.cells);
    if (bra.size() != n || ket.size() != n)
        throw std::invalid_argument(
            "expectation: wavefunction length must equal the cell count");
    double bra_norm = 0.0, ket_norm = 0.0;
    for (const auto& c : bra) bra_norm += std::norm(c);
    for (const auto& c : ket) ket_norm += std::norm(c);
    if (bra_norm == 0.0 || ket_norm == 0.0)
        throw std::invalid_argument("expectation: wavefunction has zero norm");

    const AssemblyContext ctx(spec, grid, 1);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (bra[j] == std::complex<double>(0.0)) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (ket[k] == std::complex<double>(0.0)) continue;
            acc += std::conj(bra[j]) * ket[k] *
                   ctx.entry_sym(static_cast<int>(j), static_cast<int>(k));
        }
    }
    return acc.real();
}

double expectation(const KernelSpec& spec, const DiscretizationGrid& grid,
                   const std::vector<std::complex<double>>& phi) {
    return expectation(spec, grid, phi, phi);
}

} // namespace qei
