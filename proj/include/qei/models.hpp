#pragma once

#include <optional>
#include <string>

#include "qei/quadrature.hpp"

namespace qei {

enum class ModelKind { Free, Ising, SinhGordon };

std::string model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name); // "free" | "ising" | "sinh-gordon"

/// Tolerance settings for the sinh-Gordon minimal-solution quadrature.
struct QuadratureControl {
    double abs_tol = 2.5e-13;
    int max_panels = 20000;
};

/// A factorizing scattering model: mass mu > 0, and for sinh-Gordon the
/// coupling B in (0,2). Free and Ising carry no coupling.
class ScatteringModel {
public:
    static ScatteringModel free_boson(double mass);
    static ScatteringModel ising(double mass);
    static ScatteringModel sinh_gordon(double mass, double coupling);
    static ScatteringModel make(ModelKind kind, double mass,
                                std::optional<double> coupling = std::nullopt);

    ModelKind kind() const { return kind_; }
    double mass() const { return mass_; }
    double coupling() const; // throws unless sinh-Gordon

private:
    ScatteringModel(ModelKind kind, double mass, double coupling)
        : kind_(kind), mass_(mass), coupling_(coupling) {}
    ModelKind kind_;
    double mass_;
    double coupling_;
};

/// Minimal solution on the shifted line, F_min(theta + i*pi); real and even
/// in theta for all catalog models.
///
/// Free:        1
/// Ising:       -i*sinh((theta + i*pi)/2) = cosh(theta/2)
/// sinh-Gordon: exp( -4 * Int_0^inf dt/t * G_B(t) * cos(t*theta/pi) )
///   with  G_B(t) = sinh(t*B/4) * sinh(t*(2-B)/4) * sinh(t/2) / sinh(t)^2,
/// i.e. the usual single-integral representation
///   N_B * exp( 8 * Int_0^inf dt/t * G_B(t) * sin^2(t*theta/(2*pi)) ),
///   N_B = exp( -4 * Int_0^inf dt/t * G_B(t) ),
/// with the normalization F_min(theta + i*pi) -> 1 as theta -> +-inf.
/// In this convention F_min(i*pi) = N_B < 1; it is B <-> 2-B symmetric.
double fmin_shifted(const ScatteringModel& model, double theta,
                    const QuadratureControl& ctl = {});

/// lim_{theta->inf} F_min(theta + i*pi) when finite; nullopt marks unbounded
/// growth (Ising, where F_min(theta + i*pi) ~ cosh(theta/2)).
/// For sinh-Gordon the limit is extracted by evaluating at doubling theta
/// until successive values agree within cauchy_tol.
std::optional<double> fmin_asymptotic_constant(const ScatteringModel& model,
                                               double cauchy_tol = 1e-8,
                                               const QuadratureControl& ctl = {});

namespace detail {
// Integrand factor G_B(t)/t of the sinh-Gordon representation, with the
// analytic t->0 limit B*(2-B)/32.
double sinh_gordon_integrand_factor(double t, double coupling);
} // namespace detail

} // namespace qei
