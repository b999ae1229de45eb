#pragma once

// Test-only brute-force eigenvalue oracle, independent of the production
// solver: characteristic polynomial det(A - x I) by pivoted LU, roots
// bracketed on a fine grid inside the Gershgorin bounds and bisected.

#include <cmath>
#include <random>
#include <vector>

#include "qei/matrix.hpp"

namespace qei_test {

inline qei::Matrix random_symmetric(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    qei::Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

inline double char_poly(const qei::Matrix& a, double x) {
    const int n = a.size();
    std::vector<std::vector<double>> lu(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lu[i][j] = a(i, j) - (i == j ? x : 0.0);
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(lu[r][c]) > std::fabs(lu[piv][c])) piv = r;
        if (piv != c) {
            std::swap(lu[piv], lu[c]);
            det = -det;
        }
        if (lu[c][c] == 0.0) return 0.0;
        det *= lu[c][c];
        for (int r = c + 1; r < n; ++r) {
            const double f = lu[r][c] / lu[c][c];
            for (int k = c; k < n; ++k) lu[r][k] -= f * lu[c][k];
        }
    }
    return det;
}

inline std::vector<double> oracle_eigenvalues(const qei::Matrix& a) {
    const int n = a.size();
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::fabs(a(i, j));
        lo = std::min(lo, a(i, i) - radius);
        hi = std::max(hi, a(i, i) + radius);
    }
    lo -= 1e-6;
    hi += 1e-6;
    const int grid = 40000;
    std::vector<double> roots;
    double prev_x = lo, prev_p = char_poly(a, lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double p = char_poly(a, x);
        if ((prev_p < 0.0 && p > 0.0) || (prev_p > 0.0 && p < 0.0)) {
            double bl = prev_x, bh = x, pl = prev_p;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (bl + bh);
                const double pm = char_poly(a, mid);
                if ((pl < 0.0) == (pm < 0.0)) {
                    bl = mid;
                    pl = pm;
                } else {
                    bh = mid;
                }
            }
            roots.push_back(0.5 * (bl + bh));
        }
        prev_x = x;
        prev_p = p;
    }
    return roots;
}

} // namespace qei_test
