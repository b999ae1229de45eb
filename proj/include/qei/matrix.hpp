#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qei {

/// Dense real matrix, row-major. Symmetry is a property of the contents,
/// maintained by the producers (assembly mirrors the upper triangle).
class Matrix {
public:
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[index(i, j)]; }
    double operator()(int i, int j) const { return a_[index(i, j)]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::fabs(v));
        return m;
    }

    /// Max absolute row sum.
    double norm_inf() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i) {
            double row = 0.0;
            for (int j = 0; j < n_; ++j) row += std::fabs((*this)(i, j));
            m = std::max(m, row);
        }
        return m;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_symmetric(double tol) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }

    std::vector<double> multiply(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<double> y(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<double> a_;
};

} // namespace qei
