#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "qei/errors.hpp"

namespace qei {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // accumulated error estimate
    int panels = 0;     // G7K15 panels accepted
};

/// Gauss-Legendre nodes and weights on [-1,1], exact for polynomials of
/// degree 2n-1. Newton iteration on P_n, symmetric pairs filled directly.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

namespace detail {

// Gauss 7 / Kronrod 15 pair on [a,b]. Returns the K15 value; err is the
// standard (200|G-K|)^(3/2) estimate.
template <typename F>
double gauss_kronrod_15(F&& f, double a, double b, double& err) {
    static const double xgk[8] = {
        0.991455371120813, 0.949107912342759, 0.864864423359769,
        0.741531185599394, 0.586087235467691, 0.405845151377397,
        0.207784955007898, 0.000000000000000};
    static const double wgk[8] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250,
        0.140653259715525, 0.169004726639267, 0.190350578064785,
        0.204432940075298, 0.209482141084728};
    // Gauss-7 weights; nonzero only at the shared nodes (odd indices + centre).
    static const double wg[8] = {
        0.0, 0.129484966168870, 0.0, 0.279705391489277,
        0.0, 0.381830050505119, 0.0, 0.417959183673469};

    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);

    const double fc = f(mid);
    double k15 = wgk[7] * fc;
    double g7 = wg[7] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = hw * xgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += wgk[i] * fsum;
        g7 += wg[i] * fsum;
    }
    k15 *= hw;
    g7 *= hw;

    err = 200.0 * std::fabs(g7 - k15);
    err *= std::sqrt(err);
    return k15;
}

} // namespace detail

/// Adaptive bisection with a width-proportional error budget: a panel is
/// accepted once its G7K15 estimate fits its share of abs_tol. Deterministic
/// (LIFO subdivision order). Throws NumericalError with the achieved estimate
/// when the panel cap is hit before the budget is met.
template <typename F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              int max_panels = 20000) {
    QuadResult out;
    if (a == b) return out;
    const double total_width = std::fabs(b - a);
    const double min_width = total_width * 1e-13;

    struct Interval {
        double a, b;
    };
    std::vector<Interval> stack;
    stack.push_back({a, b});
    int evaluated = 0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        double err;
        const double s = detail::gauss_kronrod_15(f, iv.a, iv.b, err);
        ++evaluated;
        const double width = std::fabs(iv.b - iv.a);
        const double budget = abs_tol * (width / total_width);
        if (err <= budget || width <= min_width) {
            out.value += s;
            out.error += err;
            ++out.panels;
            continue;
        }
        if (evaluated >= max_panels) {
            throw NumericalError(
                "adaptive quadrature: panel cap " + std::to_string(max_panels) +
                " reached before tolerance " + std::to_string(abs_tol) +
                "; achieved error estimate " + std::to_string(out.error + err));
        }
        const double mid = 0.5 * (iv.a + iv.b);
        stack.push_back({mid, iv.b});
        stack.push_back({iv.a, mid});
    }
    return out;
}

/// Composite fixed-order Gauss-Legendre over [a,b] split into `panels` equal
/// pieces. No error estimate; used where two resolutions are compared.
template <typename F>
double integrate_composite_gl(F&& f, double a, double b, int order, int panels) {
    const GaussLegendreRule rule = gauss_legendre(order);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double x0 = a + p * h;
        const double mid = x0 + 0.5 * h;
        double local = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            local += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        sum += 0.5 * h * local;
    }
    return sum;
}

} // namespace qei
