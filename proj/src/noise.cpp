#include "cptlab/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cptlab {

void CorrelationModel::validate() const {
    if (!std::isfinite(c0) || !std::isfinite(tau_c)) {
        throw std::invalid_argument("CorrelationModel: parameters must be finite");
    }
    if (c0 < 0.0) throw std::invalid_argument("CorrelationModel: c0 must be >= 0");
    if (!(tau_c > 0.0)) throw std::invalid_argument("CorrelationModel: tau_c must be > 0");
}

NoiseStrength NoiseStrength::from_alpha(double alpha, double gamma_e) {
    if (!(gamma_e > 0.0)) {
        throw std::invalid_argument("NoiseStrength: gamma_e must be > 0");
    }
    if (alpha < 0.0) throw std::invalid_argument("NoiseStrength: alpha must be >= 0");
    if (alpha == 0.0) return noiseless();
    NoiseStrength s;
    s.noiseless_ = false;
    s.alpha_ = alpha;
    s.tau2_ = 1.0 / (gamma_e * gamma_e * alpha);
    s.gamma_e_ = gamma_e;
    return s;
}

NoiseStrength NoiseStrength::from_tau2(double tau2, double gamma_e) {
    if (!(tau2 > 0.0)) throw std::invalid_argument("NoiseStrength: tau2 must be > 0");
    if (!(gamma_e > 0.0)) {
        throw std::invalid_argument("NoiseStrength: gamma_e must be > 0");
    }
    NoiseStrength s;
    s.noiseless_ = false;
    s.alpha_ = 1.0 / (gamma_e * gamma_e * tau2);
    s.tau2_ = tau2;
    s.gamma_e_ = gamma_e;
    return s;
}

double NoiseStrength::tau2() const {
    if (noiseless_) {
        throw std::logic_error("NoiseStrength: tau2 is unbounded for the noiseless variant");
    }
    return tau2_;
}

double correlation(const CorrelationModel& model, double tau) {
    model.validate();
    if (!std::isfinite(tau)) throw std::invalid_argument("correlation: tau must be finite");
    switch (model.kind) {
        case CorrelationKind::Exponential:
            return model.c0 * model.c0 * std::exp(-std::abs(tau) / model.tau_c);
    }
    throw std::logic_error("correlation: unknown model kind");
}

double spectral_density(const CorrelationModel& model, double omega) {
    model.validate();
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("spectral_density: omega must be finite");
    }
    switch (model.kind) {
        case CorrelationKind::Exponential: {
            const double wt = omega * model.tau_c;
            return model.c0 * model.c0 * model.tau_c /
                   (std::numbers::pi * (1.0 + wt * wt));
        }
    }
    throw std::logic_error("spectral_density: unknown model kind");
}

double alpha_t(const CorrelationModel& model, double t) {
    model.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("alpha_t: t must be >= 0");
    switch (model.kind) {
        case CorrelationKind::Exponential:
            // expm1 keeps precision at t << tau_c
            return -model.c0 * model.c0 * model.tau_c * std::expm1(-t / model.tau_c);
    }
    throw std::logic_error("alpha_t: unknown model kind");
}

NoiseStrength markov_strength(const CorrelationModel& model, double gamma_e) {
    model.validate();
    if (!(gamma_e > 0.0)) {
        throw std::invalid_argument("markov_strength: gamma_e must be > 0");
    }
    const double alpha = model.c0 * model.c0 * model.tau_c;
    return NoiseStrength::from_alpha(alpha, gamma_e);
}

CorrelationModel model_from_tau2(double tau2, double tau_c, double gamma_e) {
    if (!(tau2 > 0.0) || !(tau_c > 0.0) || !(gamma_e > 0.0)) {
        throw std::invalid_argument("model_from_tau2: tau2, tau_c, gamma_e must be > 0");
    }
    CorrelationModel model;
    model.kind = CorrelationKind::Exponential;
    model.tau_c = tau_c;
    model.c0 = 1.0 / std::sqrt(gamma_e * gamma_e * tau2 * tau_c);
    return model;
}

} // namespace cptlab
