#include "qei/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qei/parallel.hpp"

namespace qei {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::QeiHolds: return "QeiHolds";
        case Verdict::NoGo: return "NoGo";
        case Verdict::Borderline: return "Borderline";
    }
    throw std::logic_error("unreachable verdict");
}

GrowthClassification classify_growth(const KernelSpec& spec,
                                     const GrowthProbe& probe) {
    if (!(probe.theta_min > 0.0) || !(probe.theta_max > probe.theta_min) ||
        probe.samples < 2)
        throw std::invalid_argument("classify_growth: invalid probe range");

    GrowthClassification out{Verdict::Borderline, std::nullopt,
                             probe.theta_min, probe.theta_max, probe.margin,
                             ""};

    // Growth order of F_P relative to cosh(theta): deg P, plus 1/2 for the
    // Ising minimal solution (cosh(theta/2)); the free and sinh-Gordon
    // minimal solutions tend to constants.
    const double fmin_order =
        (spec.model.kind() == ModelKind::Ising) ? 0.5 : 0.0;
    const double growth_order = spec.poly.degree() + fmin_order;
    if (growth_order > 1.0) {
        out.verdict = Verdict::NoGo;
        out.asymptotic_ratio = std::nullopt; // unbounded
        return out;
    }

    // Bounded ratio: sample at geometrically spaced theta.
    std::vector<double> ratios(probe.samples);
    const double factor = std::pow(probe.theta_max / probe.theta_min,
                                   1.0 / (probe.samples - 1));
    double theta = probe.theta_min;
    for (int i = 0; i < probe.samples; ++i) {
        ratios[i] = std::fabs(f_p(spec, theta)) / std::cosh(theta);
        theta *= factor;
    }
    const double rho = ratios.back();
    const double gap = std::fabs(ratios[probe.samples - 1] -
                                 ratios[probe.samples - 2]);
    out.asymptotic_ratio = rho;
    if (gap > 1e-4 * std::max(1.0, rho)) {
        std::ostringstream diag;
        diag << "ratio samples not Cauchy (last gap " << gap
             << ") although bounded growth was expected";
        out.diagnostic = diag.str();
        out.verdict = Verdict::Borderline;
        return out;
    }
    if (rho < 0.5 - probe.margin)
        out.verdict = Verdict::QeiHolds;
    else if (rho > 0.5 + probe.margin)
        out.verdict = Verdict::NoGo;
    else
        out.verdict = Verdict::Borderline;
    return out;
}

AlphaWindow admissible_alpha_window(const ScatteringModel& model) {
    const std::optional<double> limit = fmin_asymptotic_constant(model);
    if (!limit) return AlphaWindow{true, 0.0};
    return AlphaWindow{false, 1.0 / (2.0 * *limit)};
}

NegativityWitness find_negativity_witness(const KernelSpec& spec,
                                          const WitnessSearch& search) {
    if (!(search.theta_max > search.theta_min) || search.samples < 2)
        throw std::invalid_argument("find_negativity_witness: invalid range");
    const double threshold = 1.0 + 1e-9;
    const double step =
        (search.theta_max - search.theta_min) / (search.samples - 1);
    int hit = -1;
    for (int i = 0; i < search.samples; ++i) {
        const double theta = search.theta_min + i * step;
        if (std::fabs(f_p(spec, theta)) > threshold) {
            hit = i;
            break;
        }
    }
    if (hit < 0) return NegativityWitness{false, 0.0, 0.0};
    double hi = search.theta_min + hit * step;
    if (hit > 0) {
        // Bisect the first crossing; keep the endpoint above the threshold.
        double lo = search.theta_min + (hit - 1) * step;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::fabs(f_p(spec, mid)) > threshold)
                hi = mid;
            else
                lo = mid;
        }
    }
    return NegativityWitness{true, hi, f_p(spec, hi)};
}

std::vector<CutoffPoint> scan_cutoff(const KernelSpec& spec,
                                     const std::vector<double>& cutoffs,
                                     double cell_width, int quadrature_order,
                                     unsigned threads) {
    if (cutoffs.empty())
        throw std::invalid_argument("scan_cutoff: empty cutoff list");
    if (!(cell_width > 0.0))
        throw std::invalid_argument("scan_cutoff: cell width must be > 0");
    for (std::size_t i = 0; i + 1 < cutoffs.size(); ++i)
        if (!(cutoffs[i] < cutoffs[i + 1]))
            throw std::invalid_argument("scan_cutoff: cutoffs must increase");

    std::vector<CutoffPoint> out(cutoffs.size());
    parallel_for(cutoffs.size(), threads, [&](std::size_t i) {
        const double R = cutoffs[i];
        const int n = std::max<int>(1, std::llround(2.0 * R / cell_width));
        const DiscretizationGrid grid(R, n, quadrature_order);
        const SpectrumResult res = lowest_eigenpair(assemble_matrix(spec, grid));
        out[i] = CutoffPoint{R, n, res.lambda_min, res.residual};
    });
    return out;
}

std::vector<CouplingPoint> scan_coupling(const std::vector<double>& couplings,
                                         double mass,
                                         const DiscretizationGrid& grid,
                                         double sigma, const PolynomialP& poly,
                                         unsigned threads) {
    if (couplings.empty())
        throw std::invalid_argument("scan_coupling: empty coupling list");
    for (double b : couplings)
        if (!(b > 0.0 && b < 2.0))
            throw std::invalid_argument(
                "scan_coupling: couplings must lie in (0,2)");

    std::vector<CouplingPoint> out(couplings.size());
    parallel_for(couplings.size(), threads, [&](std::size_t i) {
        const ScatteringModel model =
            ScatteringModel::sinh_gordon(mass, couplings[i]);
        const KernelSpec spec(model, poly, SmearingFunction(sigma, mass), 0, 0);
        const SpectrumResult res = lowest_eigenpair(assemble_matrix(spec, grid));
        out[i] = CouplingPoint{couplings[i], res.lambda_min, res.residual};
    });
    return out;
}

} // namespace qei
