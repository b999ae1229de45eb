#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qei/kernel.hpp"
#include "qei/spectral.hpp"

namespace qei {

enum class Verdict { QeiHolds, NoGo, Borderline };

std::string verdict_name(Verdict v);

struct GrowthProbe {
    double theta_min = 10.0;
    double theta_max = 30.0;
    int samples = 5;      // geometrically spaced
    double margin = 0.02; // half-width of the Borderline band around 1/2
};

struct GrowthClassification {
    Verdict verdict;
    std::optional<double> asymptotic_ratio; // nullopt marks unbounded growth
    double probe_theta_min;
    double probe_theta_max;
    double margin;
    std::string diagnostic; // non-empty when the probe was inconclusive
};

/// Classifies the large-rapidity growth of F_P against the cosh(theta)/2
/// threshold separating the bounded-below and unbounded-below regimes:
/// rho = lim |F_P(theta)|/cosh(theta). Degree bookkeeping (deg P plus 1/2
/// for the Ising minimal solution) detects unbounded ratios analytically;
/// otherwise rho is estimated by sampling at geometrically spaced theta.
/// QeiHolds iff rho < 1/2 - margin, NoGo iff rho > 1/2 + margin or
/// unbounded, Borderline otherwise.
GrowthClassification classify_growth(const KernelSpec& spec,
                                     const GrowthProbe& probe = {});

struct AlphaWindow {
    bool p_equiv_one_only; // Ising: no linear freedom, P must be identically 1
    double half_width;     // else P(x) = (1-a) + a x is admissible for |a| < half_width
};

/// Admissible linear-polynomial window |alpha| < 1/(2 F_min(inf + i pi)).
/// For Ising the minimal solution is unbounded and the window degenerates to
/// "P = 1 only".
AlphaWindow admissible_alpha_window(const ScatteringModel& model);

struct WitnessSearch {
    double theta_min = 0.0;
    double theta_max = 20.0;
    int samples = 201;
};

struct NegativityWitness {
    bool present;
    double theta_p;  // rapidity with |F_P(theta_p)| > 1
    double fp_value; // F_P(theta_p)
};

/// Scans |F_P| for a crossing of 1; any such point certifies one-particle
/// states of negative smeared energy density. Absent when no sample exceeds
/// 1 + 1e-9.
NegativityWitness find_negativity_witness(const KernelSpec& spec,
                                          const WitnessSearch& search = {});

struct CutoffPoint {
    double cutoff; // R
    int cells;     // N chosen to keep the cell width fixed
    double lambda_min;
    double residual;
};

/// Lowest eigenvalue per cutoff R at fixed cell width (N grows with R).
/// Bounded specs converge with R; no-go specs keep falling.
std::vector<CutoffPoint> scan_cutoff(const KernelSpec& spec,
                                     const std::vector<double>& cutoffs,
                                     double cell_width, int quadrature_order,
                                     unsigned threads = 1);

struct CouplingPoint {
    double coupling; // B
    double lambda_min;
    double residual;
};

/// Lowest eigenvalue across the sinh-Gordon coupling family at a fixed grid.
std::vector<CouplingPoint> scan_coupling(const std::vector<double>& couplings,
                                         double mass,
                                         const DiscretizationGrid& grid,
                                         double sigma, const PolynomialP& poly,
                                         unsigned threads = 1);

} // namespace qei
