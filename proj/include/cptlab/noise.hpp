// noise.hpp — Classical-bath correlation models and derived strength parameters

#pragma once

#include "cptlab/types.hpp"

namespace cptlab {

// Model families for the bath correlation function C(tau). Only the exponential
// (Ornstein-Uhlenbeck-like) family is built in; the enumeration leaves room for
// Gaussian or power-law decays.
enum class CorrelationKind { Exponential };

// Stationary zero-mean classical bath described by its two-point correlation
// function. For the exponential family C(tau) = c0^2 exp(-|tau|/tau_c).
struct CorrelationModel {
    CorrelationKind kind = CorrelationKind::Exponential;
    double c0 = 0.0;     // field standard deviation (field units)
    double tau_c = 1.0;  // correlation time (us)

    void validate() const;  // c0 >= 0, tau_c > 0
};

// Markovian strength alpha = integral_0^inf C(tau) dtau and the decoherence
// timescale tau2 = 1/(gamma_e^2 alpha). The noiseless case (alpha = 0,
// tau2 unbounded) is an explicit variant rather than an IEEE infinity so that
// generator code branches on it deliberately.
class NoiseStrength {
public:
    NoiseStrength() = default;  // noiseless

    static NoiseStrength noiseless() { return NoiseStrength{}; }
    static NoiseStrength from_alpha(double alpha, double gamma_e);
    static NoiseStrength from_tau2(double tau2, double gamma_e);

    bool is_noiseless() const noexcept { return noiseless_; }
    double alpha() const noexcept { return alpha_; }  // 0 for the noiseless variant

    // The coupling used at construction; alpha * gamma_e^2 * tau2 = 1 holds for it.
    // Defaults to 1 for the noiseless variant, where it never enters.
    double gamma_e() const noexcept { return gamma_e_; }

    // Throws std::logic_error for the noiseless variant (tau2 is unbounded there).
    double tau2() const;

private:
    bool noiseless_ = true;
    double alpha_ = 0.0;
    double tau2_ = 0.0;
    double gamma_e_ = 1.0;
};

// C(|tau|); even in tau by stationarity.
double correlation(const CorrelationModel& model, double tau);

// S(omega) = (1/2pi) * integral C(tau) e^{-i omega tau} dtau. For the exponential
// family this is the Lorentzian c0^2 tau_c / (pi (1 + omega^2 tau_c^2)).
double spectral_density(const CorrelationModel& model, double omega);

// Running strength alpha(t) = integral_0^t C(s) ds, monotone nondecreasing with
// alpha(0) = 0 and alpha(t) -> alpha as t -> inf. Throws on negative t.
double alpha_t(const CorrelationModel& model, double t);

// Long-time (Markovian) limit: alpha = c0^2 tau_c = pi S(0), tau2 = 1/(gamma_e^2 alpha).
// c0 = 0 yields the explicit noiseless variant.
NoiseStrength markov_strength(const CorrelationModel& model, double gamma_e);

// Inverse of markov_strength for tau2-parameterized sweeps: the exponential model
// with c0 = (gamma_e^2 tau2 tau_c)^{-1/2}, given the correlation time.
CorrelationModel model_from_tau2(double tau2, double tau_c, double gamma_e);

} // namespace cptlab
