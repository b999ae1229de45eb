#include "qei/models.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qei {

std::string model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Free: return "free";
        case ModelKind::Ising: return "ising";
        case ModelKind::SinhGordon: return "sinh-gordon";
    }
    throw std::logic_error("unreachable model kind");
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "free") return ModelKind::Free;
    if (name == "ising") return ModelKind::Ising;
    if (name == "sinh-gordon") return ModelKind::SinhGordon;
    throw std::invalid_argument("unknown model name \"" + name +
                                "\" (expected free | ising | sinh-gordon)");
}

ScatteringModel ScatteringModel::make(ModelKind kind, double mass,
                                      std::optional<double> coupling) {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw std::invalid_argument("model mass must be > 0");
    if (kind == ModelKind::SinhGordon) {
        if (!coupling)
            throw std::invalid_argument("sinh-gordon model requires a coupling");
        if (!(*coupling > 0.0 && *coupling < 2.0))
            throw std::invalid_argument("sinh-gordon coupling must lie in (0,2)");
        return ScatteringModel(kind, mass, *coupling);
    }
    if (coupling)
        throw std::invalid_argument("coupling is only meaningful for sinh-gordon");
    return ScatteringModel(kind, mass, 0.0);
}

ScatteringModel ScatteringModel::free_boson(double mass) {
    return make(ModelKind::Free, mass);
}
ScatteringModel ScatteringModel::ising(double mass) {
    return make(ModelKind::Ising, mass);
}
ScatteringModel ScatteringModel::sinh_gordon(double mass, double coupling) {
    return make(ModelKind::SinhGordon, mass, coupling);
}

double ScatteringModel::coupling() const {
    if (kind_ != ModelKind::SinhGordon)
        throw std::logic_error("coupling() called on a model without coupling");
    return coupling_;
}

namespace detail {

double sinh_gordon_integrand_factor(double t, double coupling) {
    if (t == 0.0) return coupling * (2.0 - coupling) / 32.0;
    const double num = std::sinh(t * coupling / 4.0) *
                       std::sinh(t * (2.0 - coupling) / 4.0) *
                       std::sinh(t / 2.0);
    const double sh = std::sinh(t);
    return num / (t * sh * sh);
}

} // namespace detail

namespace {

// Upper truncation of the semi-infinite integral. For t >= 1 the integrand
// factor is bounded by exp(-t)/(1.49*t), so the discarded tail is below
// exp(-40)/60 ~ 7e-20.
constexpr double kTailCutoff = 40.0;

double sinh_gordon_fmin_shifted(double theta, double coupling,
                                const QuadratureControl& ctl) {
    const double freq = theta / M_PI;
    auto integrand = [coupling, freq](double t) {
        return detail::sinh_gordon_integrand_factor(t, coupling) *
               std::cos(freq * t);
    };
    // Split at t=1: the t->0 end is handled by the analytic limit inside the
    // integrand; the remainder is exponentially damped and truncated.
    const QuadResult head =
        integrate_adaptive(integrand, 0.0, 1.0, ctl.abs_tol, ctl.max_panels);
    const QuadResult tail = integrate_adaptive(integrand, 1.0, kTailCutoff,
                                               ctl.abs_tol, ctl.max_panels);
    return std::exp(-4.0 * (head.value + tail.value));
}

} // namespace

double fmin_shifted(const ScatteringModel& model, double theta,
                    const QuadratureControl& ctl) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("fmin_shifted: theta must be finite");
    switch (model.kind()) {
        case ModelKind::Free:
            return 1.0;
        case ModelKind::Ising:
            return std::cosh(theta / 2.0);
        case ModelKind::SinhGordon:
            return sinh_gordon_fmin_shifted(theta, model.coupling(), ctl);
    }
    throw std::logic_error("unreachable model kind");
}

std::optional<double> fmin_asymptotic_constant(const ScatteringModel& model,
                                               double cauchy_tol,
                                               const QuadratureControl& ctl) {
    switch (model.kind()) {
        case ModelKind::Free:
            return 1.0;
        case ModelKind::Ising:
            return std::nullopt; // grows like cosh(theta/2)
        case ModelKind::SinhGordon:
            break;
    }
    // Doubling probe: corrections fall off like theta*exp(-theta), so a few
    // doublings reach any sensible tolerance.
    double theta = 10.0;
    double prev = fmin_shifted(model, theta, ctl);
    const double theta_cap = 320.0;
    double gap = std::numeric_limits<double>::infinity();
    while (theta < theta_cap) {
        theta *= 2.0;
        const double next = fmin_shifted(model, theta, ctl);
        gap = std::fabs(next - prev);
        if (gap < cauchy_tol) return next;
        prev = next;
    }
    std::ostringstream msg;
    msg << "fmin_asymptotic_constant: samples not Cauchy within " << cauchy_tol
        << " up to theta=" << theta_cap << " (last gap " << gap << ")";
    throw NumericalError(msg.str());
}

} // namespace qei
