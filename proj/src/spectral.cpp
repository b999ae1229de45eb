#include "qei/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qei/errors.hpp"

namespace qei {

namespace {

// Householder reduction to tridiagonal form with accumulated transformations:
// on return `a` holds the orthogonal Q with a = Q T Q^T, d the diagonal of T,
// e the subdiagonal (e[i] = T(i,i-1), e[0] = 0).
void householder_tridiagonalize(Matrix& a, std::vector<double>& d,
                                std::vector<double>& e) {
    const int n = a.size();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
    }
}

// Implicit-shift QL on a tridiagonal (d,e). If z is non-null, the rotations
// are accumulated into its columns (pass Q from the reduction to obtain the
// eigenvectors of the original matrix). Deterministic Wilkinson-style shift,
// iteration cap 50 per eigenvalue.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       Matrix* z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    std::ostringstream msg;
                    msg << "ql_implicit_shift: eigenvalue " << l
                        << " not converged after 50 iterations (best off-diagonal "
                        << std::fabs(e[l]) << ")";
                    throw NumericalError(msg.str());
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        // Negligible rotation: deflate and restart this block.
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Solve (T - lambda I) x = b for tridiagonal T by Gaussian elimination with
// partial pivoting (one level of fill-in). sub[i] = T(i+1,i).
struct TridiagShiftedSolver {
    int n;
    std::vector<double> u0, u1, u2; // upper-triangular bands
    std::vector<double> mult;       // elimination multipliers
    std::vector<char> swapped;

    TridiagShiftedSolver(const std::vector<double>& diag,
                         const std::vector<double>& sub, double lambda) {
        n = static_cast<int>(diag.size());
        u0.resize(n);
        u1.assign(n, 0.0);
        u2.assign(n, 0.0);
        mult.assign(n, 0.0);
        swapped.assign(n, 0);
        double norm_scale = 0.0;
        for (int i = 0; i < n; ++i) {
            u0[i] = diag[i] - lambda;
            norm_scale = std::max(norm_scale, std::fabs(diag[i]));
        }
        for (int i = 0; i + 1 < n; ++i) {
            u1[i] = sub[i];
            norm_scale = std::max(norm_scale, std::fabs(sub[i]));
        }
        const double tiny =
            std::max(norm_scale, 1.0) * std::numeric_limits<double>::epsilon() * 1e-3;
        for (int i = 0; i + 1 < n; ++i) {
            double low = sub[i]; // entry below the pivot
            if (std::fabs(u0[i]) < std::fabs(low)) {
                swapped[i] = 1;
                std::swap(u0[i], low);
                const double t1 = u1[i];
                u1[i] = u0[i + 1];
                u0[i + 1] = t1;
                u2[i] = u1[i + 1];
                u1[i + 1] = 0.0;
            }
            if (u0[i] == 0.0) u0[i] = tiny;
            const double m = low / u0[i];
            mult[i] = m;
            u0[i + 1] -= m * u1[i];
            u1[i + 1] -= m * u2[i];
        }
        if (u0[n - 1] == 0.0) u0[n - 1] = tiny;
    }

    void solve(std::vector<double>& x) const {
        for (int i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= mult[i] * x[i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double acc = x[i];
            if (i + 1 < n) acc -= u1[i] * x[i + 1];
            if (i + 2 < n) acc -= u2[i] * x[i + 2];
            x[i] = acc / u0[i];
        }
    }
};

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    for (double& x : v) x /= norm;
}

void fix_sign(std::vector<double>& v) {
    int idx = 0;
    double best = 0.0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (std::fabs(v[i]) > best) {
            best = std::fabs(v[i]);
            idx = i;
        }
    }
    if (v[idx] < 0.0)
        for (double& x : v) x = -x;
}

double residual_norm(const Matrix& m, const std::vector<double>& v,
                     double lambda) {
    const std::vector<double> mv = m.multiply(v);
    double acc = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        const double r = mv[i] - lambda * v[i];
        acc += r * r;
    }
    return std::sqrt(acc);
}

} // namespace

EigenPair lowest_eigenpair(const Matrix& m, double residual_tol_factor) {
    const int n = m.size();
    Matrix q = m;
    std::vector<double> d, e;
    householder_tridiagonalize(q, d, e);

    std::vector<double> values = d, off = e;
    ql_implicit_shift(values, off, nullptr);
    const double lambda0 = *std::min_element(values.begin(), values.end());

    // Tridiagonal arrays for the solver: sub[i] = T(i+1,i).
    std::vector<double> sub(std::max(0, n - 1));
    for (int i = 0; i + 1 < n; ++i) sub[i] = e[i + 1];

    const double res_tol = residual_tol_factor * m.norm_inf();
    EigenPair best;
    best.residual = std::numeric_limits<double>::infinity();

    for (int attempt = 0; attempt < 3; ++attempt) {
        TridiagShiftedSolver solver(d, sub, lambda0);
        std::vector<double> x(n);
        // Deterministic start vectors: flat, then sign-alternating patterns.
        for (int i = 0; i < n; ++i) {
            if (attempt == 0) x[i] = 1.0;
            else if (attempt == 1) x[i] = (i % 2 == 0) ? 1.0 : -1.0;
            else x[i] = 1.0 + 0.5 * std::sin(7.0 * (i + 1));
        }
        normalize(x);
        for (int it = 0; it < 4; ++it) {
            solver.solve(x);
            normalize(x);
        }
        // Back-transform to the original basis and polish.
        std::vector<double> v(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += q(i, k) * x[k];
            v[i] = acc;
        }
        normalize(v);
        const std::vector<double> mv = m.multiply(v);
        const double rayleigh =
            std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
        const double res = residual_norm(m, v, rayleigh);
        if (res < best.residual) {
            best.value = rayleigh;
            best.vector = std::move(v);
            best.residual = res;
        }
        if (best.residual <= res_tol) break;
    }

    if (best.residual > res_tol) {
        // Robust fallback: accumulate the full eigensystem.
        const EigenSystem sys = full_eigensystem(m);
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = sys.vectors(i, 0);
        normalize(v);
        const std::vector<double> mv = m.multiply(v);
        const double rayleigh =
            std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
        const double res = residual_norm(m, v, rayleigh);
        if (res < best.residual) {
            best.value = rayleigh;
            best.vector = std::move(v);
            best.residual = res;
        }
    }
    if (best.residual > res_tol) {
        std::ostringstream msg;
        msg << "lowest_eigenpair: residual " << best.residual
            << " exceeds tolerance " << res_tol;
        throw NumericalError(msg.str());
    }
    fix_sign(best.vector);
    return best;
}

std::vector<double> full_spectrum(const Matrix& m) {
    Matrix q = m;
    std::vector<double> d, e;
    householder_tridiagonalize(q, d, e);
    ql_implicit_shift(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

EigenSystem full_eigensystem(const Matrix& m) {
    const int n = m.size();
    Matrix q = m;
    std::vector<double> d, e;
    householder_tridiagonalize(q, d, e);
    ql_implicit_shift(d, e, &q);
    // Sort ascending, permuting columns alongside.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return d[a] < d[b]; });
    EigenSystem sys{std::vector<double>(n), Matrix(n)};
    for (int k = 0; k < n; ++k) {
        sys.values[k] = d[perm[k]];
        for (int i = 0; i < n; ++i) sys.vectors(i, k) = q(i, perm[k]);
    }
    return sys;
}

SpectrumResult lowest_eigenpair(const KernelMatrix& km,
                                double residual_tol_factor) {
    EigenPair pair = lowest_eigenpair(km.entries, residual_tol_factor);
    return SpectrumResult{pair.value, std::move(pair.vector), pair.residual,
                          km.grid, km.spec};
}

} // namespace qei
